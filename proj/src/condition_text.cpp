#include "condition_text.hpp"

namespace zinbiel::detail {

// Transcribed condition lists, one row per displayed equation.
const std::vector<RawCondition>& raw_conditions() {
  static const std::vector<RawCondition> rows = {
      {"Z", "Z1", 1, R"tex(( x_{i}\cdot y_{i} )\triangleright_{i} w_{i}=x_{i}\triangleright_{i}( y_{i}\triangleright_{i} w_{i}+w_{i}\triangleleft_{i} y_{i}),)tex"},
      {"Z", "Z1", 2, R"tex((x_{i}\triangleright_{i} v_{i})\triangleleft_{i} z_{i}=x_{i}\triangleright_{i}(v_{i}\triangleleft_{i} z_{i}+ z_{i}\triangleright_{i} v_{i}),)tex"},
      {"Z", "Z1", 3, R"tex((u_{i}\triangleleft_{i} y_{i})\triangleleft_{i} z_{i}=u_{i}\triangleleft_{i} (y_{i}\cdot z_{i}+ z_{i}\cdot y_{i}),)tex"},
      {"Z", "Z2", 1, R"tex((x_{i}\leftharpoonup_{i} v_{i})\cdot y_{i}+(x_{i} \triangleright_{i} v_{i})\rightharpoonup_{i} y_{i} =x_{i}\cdot (v_{i} \rightharpoonup_{i} y_{i}+y_{i} \leftharpoonup_{i} v_{i})+x_{i}\leftharpoonup_{i}( v_{i}\triangleleft_{i} y_{i} + y_{i} \triangleright_{i} v_{i}),)tex"},
      {"Z", "Z3", 1, R"tex((u_{i} \rightharpoonup_{i} x_{i})\cdot y_{i} +( u_{i}\triangleleft_{i} x_{i} )\rightharpoonup_{i} y_{i} = u_{i}\rightharpoonup_{i}( x_{i} \cdot y_{i} + y_{i}\cdot x_{i} ),)tex"},
      {"Z", "Z4", 1, R"tex(\omega_{i}(u_{i}, v_{i})\cdot x_{i}+ (u_{i} \ast_{i} v_{i} )\rightharpoonup_{i} x_{i} = u_{i}\rightharpoonup_{i}( v_{i}\rightharpoonup_{i} x_{i} + x_{i} \leftharpoonup_{i} v_{i})+ \omega_{i}(u_{i},v_{i}\triangleleft_{i} x_{i}+ x_{i} \triangleright_{i} v_{i}),)tex"},
      {"Z", "Z5", 1, R"tex((u_{i} \ast_{i} v_{i})\triangleleft_{i} x_{i} = u_{i}\triangleleft_{i}( v_{i}\rightharpoonup_{i} x_{i}+x_{i}\leftharpoonup_{i} v_{i})+u_{i} \ast_{i}( v_{i}\triangleleft_{i} x_{i} + x_{i} \triangleright_{i} v_{i} ),)tex"},
      {"Z", "Z6", 1, R"tex(( x_{i}\cdot y_{i} )\leftharpoonup_{i} w_{i} = x_{i}\cdot(y_{i} \leftharpoonup_{i} w_{i}+w_{i}\rightharpoonup_{i} y_{i})+x_{i}\leftharpoonup_{i}(y_{i} \triangleright_{i} w_{i}+w_{i}\triangleleft_{i} y_{i}),)tex"},
      {"Z", "Z7", 1, R"tex(( x_{i} \leftharpoonup_{i} v_{i})\leftharpoonup_{i} w_{i}+\omega_{i}(x_{i} \triangleright_{i} v_{i},w_{i}) =x_{i}\cdot\big(\omega_{i}(v_{i}, w_{i})+\omega_{i}(w_{i},v_{i})\big)+x_{i}\leftharpoonup_{i}(v_{i} \ast_{i} w_{i} +w_{i} \ast_{i} v_{i} ),)tex"},
      {"Z", "Z8", 1, R"tex((x_{i} \leftharpoonup_{i} v_{i}) \triangleright_{i} w_{i}+(x_{i}\triangleright_{i} v_{i})\ast_{i} w_{i} = x_{i}\triangleright_{i}( v_{i} \ast_{i} w_{i}+w_{i} \ast_{i} v_{i} ),)tex"},
      {"Z", "Z9", 1, R"tex(( u_{i}\rightharpoonup_{i} x_{i})\leftharpoonup_{i} w_{i}+\omega_{i}( u_{i}\triangleleft_{i} x_{i},w_{i}) = u_{i}\rightharpoonup_{i}( x_{i} \leftharpoonup_{i} w_{i}+w_{i}\rightharpoonup_{i} x_{i} )+\omega_{i}(u_{i}, w_{i}\triangleleft_{i} x_{i} + x_{i}\triangleright_{i} w_{i}),)tex"},
      {"Z", "Z10", 1, R"tex((u_{i}\rightharpoonup_{i} x_{i}) \triangleright_{i} w_{i}+ (u_{i}\triangleleft_{i} x_{i})\ast_{i} w_{i} = u_{i}\triangleleft_{i}(x_{i} \leftharpoonup_{i} w_{i} + w_{i}\rightharpoonup_{i} x_{i} )+u_{i} \ast_{i}(x_{i} \triangleright_{i} w_{i} + w_{i}\triangleleft_{i} x_{i}),)tex"},
      {"Z", "Z11", 1, R"tex(\omega_{i}(u_{i}, v_{i})\leftharpoonup_{i} w_{i}+\omega_{i}( u_{i} \ast_{i} v_{i} ,w_{i} ) =u_{i}\rightharpoonup_{i}\big(\omega_{i}(v_{i}, w_{i})+\omega_{i}(w_{i},v_{i})\big)+ \omega_{i}(u_{i},v_{i} \ast_{i} w_{i}+ w_{i} \ast_{i} v_{i} ),)tex"},
      {"Z", "Z12", 1, R"tex(\omega_{i}(u_{i}, v_{i}) \triangleright_{i} w_{i}+(u_{i} \ast_{i} v_{i})\ast_{i} w_{i} =u_{i}\triangleleft_{i} \big(\omega_{i}(v_{i}, w_{i})+\omega_{i}(w_{i},v_{i})\big)+u_{i} \ast_{i}(v_{i} \ast_{i} w_{i}+w_{i} \ast_{i} v_{i}),)tex"},
      {"Z", "Z13", 1, R"tex((x_{0}\cdot x_{1})\leftharpoonup_{1}u_{1}=x_{0}\cdot(x_{1}\leftharpoonup_{1}u_{1}+u_{1}\rightharpoonup_{1}x_{1})+ x_{0}\leftharpoonup_{2}(x_{1} \triangleright_{1}u_{1}+u_{1}\triangleleft_{1}x_{1}),)tex"},
      {"Z", "Z14", 1, R"tex((x_{0} \leftharpoonup_{2}u_{1})\cdot x_{1}+( x_{0}\triangleright_{2}u_{1})\rightharpoonup_{1}x_{1}=x_{0}\cdot(u_{1}\rightharpoonup_{1}x_{1}+x_{1} \leftharpoonup_{1}u_{1})+x_{0}\leftharpoonup_{2}(u_{1}\triangleleft_{1} x_{1}+x_{1}\triangleright_{1} u_{1}),)tex"},
      {"Z", "Z15", 1, R"tex((x_{0} \leftharpoonup_{2} u_{1}) \leftharpoonup_{1} v_{1} + \omega_{1}( x_{0} \triangleright_{2} u_{1}, v_{1})=x_{0}\cdot (\omega_{1}(u_{1}, v_{1})+\omega_{1}(v_{1}, u_{1}))+x_{0} \leftharpoonup_{2} (u_{1} \ast_{1} v_{1}+v_{1} \ast_{1} u_{1}),)tex"},
      {"Z", "Z16", 1, R"tex((u_{0}\rightharpoonup_{2} x_{1})\cdot y_{1} + (u_{0}\triangleleft_{2} x_{1})\rightharpoonup_{1} y_{1}=u_{0}\rightharpoonup_{2} ( x_{1}\cdot y_{1}+y_{1}\cdot x_{1}),)tex"},
      {"Z", "Z17", 1, R"tex((u_{0}\rightharpoonup_{2} x_{1}) \leftharpoonup_{1}u_{1} + \omega_{1}(u_{0}\triangleleft_{2} x_{1},u_{1})=u_{0}\rightharpoonup_{2} (x_{1} \leftharpoonup_{1}u_{1}+u_{1}\rightharpoonup_{1} x_{1})+ \omega_{2}(u_{0}, x_{1} \triangleright_{1}u_{1}+u_{1}\triangleleft_{1} x_{1}),)tex"},
      {"Z", "Z18", 1, R"tex(\omega_{2}(u_{0}, u_{1})\cdot x_{1} + (u_{0} \ast_{2} u_{1})\rightharpoonup_{1} x_{1}=u_{0}\rightharpoonup_{2} (u_{1}\rightharpoonup_{1} x_{1}+x_{1} \leftharpoonup_{1} u_{1}) + \omega_{2}(u_{0},u_{1}\triangleleft_{1} x_{1}+x_{1} \triangleright_{1} u_{1}),)tex"},
      {"Z", "Z19", 1, R"tex(\omega_{2}(u_{0}, u_{1}) \leftharpoonup_{1} v_{1} + \omega_{1}(u_{0} \ast_{2} u_{1}, v_{1})=u_{0}\rightharpoonup_{2} (\omega_{1}(u_{1}, v_{1})+\omega_{1}(v_{1}, u_{1}))+ \omega_{2}(u_{0},u_{1} \ast_{1} v_{1}+ v_{1} \ast_{1} u_{1}),)tex"},
      {"Z", "Z20", 1, R"tex((x_{0}\cdot x_{1}) \triangleright_{1} u_{1}=x_{0} \triangleright_{2} (x_{1} \triangleright_{1} u_{1}+u_{1}\triangleleft_{1} x_{1}),)tex"},
      {"Z", "Z21", 1, R"tex(( x_{0} \triangleright_{2} u_{1})\triangleleft_{1} y_{1} =x_{0} \triangleright_{2} (u_{1}\triangleleft_{1} y_{1}+y_{1} \triangleright_{1} u_{1}),)tex"},
      {"Z", "Z22", 1, R"tex((x_{0} \leftharpoonup_{2} u_{1}) \triangleright_{1} v_{1}+( x_{0} \triangleright_{2} u_{1}) \ast_{1} v_{1}=x_{0} \triangleright_{2} (u_{1} \ast_{1} v_{1}+v_{1} \ast_{1} u_{1}),)tex"},
      {"Z", "Z23", 1, R"tex((u_{0}\triangleleft_{2} x_{1})\triangleleft_{1} y_{1}=u_{0}\triangleleft_{2} (x_{1}\cdot y_{1}+y_{1}\cdot x_{1}),)tex"},
      {"Z", "Z24", 1, R"tex((u_{0}\rightharpoonup_{2} x_{1}) \triangleright_{1} u_{1} + (u_{0}\triangleleft_{2} x_{1}) \ast_{1} u_{1}=u_{0}\triangleleft_{2} (x_{1} \leftharpoonup_{1} u_{1}+u_{1}\rightharpoonup_{1} x_{1}) + u_{0} \ast_{2} (x_{1} \triangleright_{1} u_{1}+u_{1}\triangleleft_{1} x_{1}),)tex"},
      {"Z", "Z25", 1, R"tex((u_{0} \ast_{2} u_{1})\triangleleft_{1} x_{1}=u_{0}\triangleleft_{2} (u_{1}\rightharpoonup_{1} x_{1}+x_{1} \leftharpoonup_{1} u_{1}) + u_{0} \ast_{2} (u_{1}\triangleleft_{1} x_{1}+x_{1} \triangleright_{1} u_{1}),)tex"},
      {"Z", "Z26", 1, R"tex(\omega_{2}(u_{0}, u_{1}) \triangleright_{1} v_{1} + (u_{0} \ast_{2} u_{1}) \ast_{1} v_{1}=u_{0}\triangleleft_{2} (\omega_{1}(u_{1}, v_{1})+\omega_{1}(v_{1}, u_{1})) + u_{0} \ast_{2} (u_{1} \ast_{1} v_{1}+v_{1} \ast_{1} u_{1}) \big),)tex"},
      {"Z", "Z27", 1, R"tex((x_{0} \leftharpoonup_{0} u_{0})\cdot x_{1}+ (x_{0} \triangleright_{0} u_{0})\rightharpoonup_{2} x_{1}=x_{0}\cdot (u_{0}\rightharpoonup_{2} x_{1}+x_{1} \leftharpoonup_{3} u_{0})+ x_{0} \leftharpoonup_{2} (u_{0}\triangleleft_{2} x_{1}+x_{1} \triangleright_{3} u_{0}),)tex"},
      {"Z", "Z28", 1, R"tex((u_{0}\rightharpoonup_{0} x_{0})\cdot x_{1}+ (u_{0}\triangleleft_{0} x_{0})\rightharpoonup_{2} x_{1}=u_{0}\rightharpoonup_{2} (x_{0}\cdot x_{1}+x_{1}\cdot x_{0}),)tex"},
      {"Z", "Z29", 1, R"tex(\omega_{0}(u_{0}, v_{0})\cdot x_{1}+ (u_{0} \ast_{0} v_{0})\rightharpoonup_{2} x_{1}= u_{0}\rightharpoonup_{2} (v_{0}\rightharpoonup_{2} x_{1}+x_{1} \leftharpoonup_{3} v_{0})+ \omega_{2}(u_{0},v_{0}\triangleleft_{2} x_{1}+x_{1} \triangleright_{3} v_{0}),)tex"},
      {"Z", "Z30", 1, R"tex((x_{0}\cdot y_{0}) \leftharpoonup_{2} u_{1}=x_{0}\cdot (y_{0} \leftharpoonup_{2} u_{1}+u_{1}\rightharpoonup_{3} y_{0})+x_{0} \leftharpoonup_{2} (y_{0} \triangleright_{2} u_{1}+u_{1}\triangleleft_{3} y_{0}),)tex"},
      {"Z", "Z31", 1, R"tex((x_{0} \leftharpoonup_{0} u_{0}) \leftharpoonup_{2} u_{1}+ \omega_{2}(x_{0} \triangleright_{0} u_{0}, u_{1})=x_{0}\cdot (\omega_{2}(u_{0}, u_{1})+ \omega_{3}(u_{1}, u_{0})) + x_{0} \leftharpoonup_{2} (u_{0} \ast_{2} u_{1}+u_{1} \ast_{3} u_{0}),)tex"},
      {"Z", "Z32", 1, R"tex((u_{0}\rightharpoonup_{0} x_{0}) \leftharpoonup_{2} u_{1}+ \omega_{2}(u_{0}\triangleleft_{0} x_{0}, u_{1})= u_{0}\rightharpoonup_{2} (x_{0} \leftharpoonup_{2} u_{1}+u_{1}\rightharpoonup_{3} x_{0}) + \omega_{2}(u_{0}, x_{0} \triangleright_{2} u_{1}+u_{1}\triangleleft_{3} x_{0}),)tex"},
      {"Z", "Z33", 1, R"tex(\omega_{0}(u_{0}, v_{0}) \leftharpoonup_{2} u_{1}+ \omega_{2}(u_{0} \ast_{0} v_{0}, u_{1})= u_{0}\rightharpoonup_{2} (\omega_{2}(v_{0}, u_{1}) + \omega_{3}(u_{1}, v_{0}))+ \omega_{2}(u_{0},v_{0} \ast_{2} u_{1}+u_{1} \ast_{3} v_{0}),)tex"},
      {"Z", "Z34", 1, R"tex((x_{0}\cdot y_{0}) \triangleright_{2} u_{1}=x_{0} \triangleright_{2} (y_{0} \triangleright_{2} u_{1}+u_{1}\triangleleft_{3} y_{0}),)tex"},
      {"Z", "Z35", 1, R"tex((x_{0} \leftharpoonup_{0} u_{0}) \triangleright_{2} u_{1} + (x_{0} \triangleright_{0} u_{0}) \ast_{2} u_{1}=x_{0} \triangleright_{2} (u_{0} \ast_{2} u_{1}+u_{1} \ast_{3} u_{0}),)tex"},
      {"Z", "Z36", 1, R"tex((u_{0}\rightharpoonup_{0} x_{0}) \triangleright_{2} u_{1}+ (u_{0}\triangleleft_{0} x_{0}) \ast_{2} u_{1}=u_{0}\triangleleft_{2} (x_{0} \leftharpoonup_{2} u_{1}+u_{1}\rightharpoonup_{3} x_{0})+ u_{0} \ast_{2} (x_{0} \triangleright_{2} u_{1}+u_{1}\triangleleft_{3} x_{0}),)tex"},
      {"Z", "Z37", 1, R"tex(\omega_{0}(u_{0}, v_{0}) \triangleright_{2} u_{1}+ (u_{0} \ast_{0} v_{0}) \ast_{2} u_{1}=u_{0}\triangleleft_{2} (\omega_{2}(v_{0}, u_{1})+ \omega_{3}(u_{1}, v_{0})) + u_{0} \ast_{2} (v_{0} \ast_{2} u_{1}+u_{1} \ast_{3} v_{0}),)tex"},
      {"Z", "Z38", 1, R"tex((x_{0} \triangleright_{0} u_{0})\triangleleft_{2} x_{1}=x_{0} \triangleright_{2} (u_{0}\triangleleft_{2} x_{1}+ x_{1} \triangleright_{3} u_{0}),)tex"},
      {"Z", "Z39", 1, R"tex((u_{0}\triangleleft_{0} x_{0})\triangleleft_{2} x_{1}=u_{0}\triangleleft_{2} (x_{0}\cdot x_{1}+x_{1}\cdot x_{0}),)tex"},
      {"Z", "Z40", 1, R"tex((u_{0} \ast_{0} v_{0})\triangleleft_{2} x_{1}=u_{0}\triangleleft_{2} (v_{0}\rightharpoonup_{2} x_{1}+x_{1} \leftharpoonup_{3} v_{0})+ u_{0} \ast_{2} (v_{0}\triangleleft_{2} x_{1}+x_{1} \triangleright_{3} v_{0}),)tex"},
      {"Z", "Z41", 1, R"tex((x_{1} \leftharpoonup_{3} u_{0})\cdot x_{0}+ (x_{1} \triangleright_{3} u_{0})\rightharpoonup_{3} x_{0}=x_{1}\cdot (u_{0}\rightharpoonup_{0} x_{0}+x_{0} \leftharpoonup_{0} u_{0}) + x_{1} \leftharpoonup_{3} (u_{0}\triangleleft_{0} x_{0}+x_{0} \triangleright_{0} u_{0}),)tex"},
      {"Z", "Z42", 1, R"tex((u_{1}\rightharpoonup_{3} x_{0})\cdot y_{0} + (u_{1}\triangleleft_{3} x_{0})\rightharpoonup_{3} y_{0}=u_{1}\rightharpoonup_{3} (x_{0}\cdot y_{0}+y_{0}\cdot x_{0}),)tex"},
      {"Z", "Z43", 1, R"tex(\omega_{3}(u_{1}, u_{0})\cdot x_{0} + (u_{1} \ast_{3} u_{0})\rightharpoonup_{3} x_{0}=u_{1}\rightharpoonup_{3} (u_{0}\rightharpoonup_{0} x_{0}+x_{0} \leftharpoonup_{0} u_{0})+ \omega_{3}(u_{1},u_{0}\triangleleft_{0} x_{0}+x_{0} \triangleright_{0} u_{0}),)tex"},
      {"Z", "Z44", 1, R"tex((x_{1}\cdot x_{0}) \leftharpoonup_{3} u_{0}=x_{1}\cdot (x_{0} \leftharpoonup_{0} u_{0}+u_{0}\rightharpoonup_{0} x_{0}) + x_{1} \leftharpoonup_{3} (x_{0} \triangleright_{0} u_{0}+u_{0}\triangleleft_{0} x_{0}),)tex"},
      {"Z", "Z45", 1, R"tex((x_{1} \leftharpoonup_{3} u_{0}) \leftharpoonup_{3} v_{0}+ \omega_{3}(x_{1} \triangleright_{3} u_{0}, v_{0})=x_{1}\cdot (\omega_{0}(u_{0}, v_{0})+\omega_{0}(v_{0}, u_{0}))+ x_{1} \leftharpoonup_{3} (u_{0} \ast_{0} v_{0}+v_{0} \ast_{0} u_{0}),)tex"},
      {"Z", "Z46", 1, R"tex((u_{1}\rightharpoonup_{3} x_{0}) \leftharpoonup_{3} u_{0} + \omega_{3}(u_{1}\triangleleft_{3} x_{0}, u_{0})=u_{1}\rightharpoonup_{3} (x_{0} \leftharpoonup_{0} u_{0}+u_{0}\rightharpoonup_{0} x_{0}) + \omega_{3}(u_{1}, x_{0} \triangleright_{0} u_{0}+ u_{0}\triangleleft_{0} x_{0}),)tex"},
      {"Z", "Z47", 1, R"tex(\omega_{3}(u_{1}, u_{0}) \leftharpoonup_{3} v_{0} + \omega_{3}(u_{1} \ast_{3} u_{0}, v_{0})=u_{1}\rightharpoonup_{3} (\omega_{0}(u_{0}, v_{0})+ \omega_{0}(v_{0}, u_{0})) + \omega_{3}(u_{1},u_{0} \ast_{0} v_{0}+v_{0} \ast_{0} u_{0}),)tex"},
      {"Z", "Z48", 1, R"tex((x_{1}\cdot x_{0}) \triangleright_{3} u_{0}=x_{1} \triangleright_{3} (x_{0} \triangleright_{0} u_{0}+u_{0}\triangleleft_{0} x_{0}),)tex"},
      {"Z", "Z49", 1, R"tex((x_{1} \leftharpoonup_{3} u_{0}) \triangleright_{3} v_{0}+ (x_{1} \triangleright_{3} u_{0}) \ast_{3} v_{0}=x_{1} \triangleright_{3} (u_{0} \ast_{0} v_{0}+v_{0} \ast_{0} u_{0}),)tex"},
      {"Z", "Z50", 1, R"tex((u_{1}\rightharpoonup_{3} x_{0}) \triangleright_{3} u_{0}+ (u_{1}\triangleleft_{3} x_{0}) \ast_{3} u_{0}=u_{1}\triangleleft_{3} (x_{0} \leftharpoonup_{0} u_{0}+u_{0}\rightharpoonup_{0} x_{0})+ u_{1} \ast_{3} (x_{0} \triangleright_{0} u_{0}+u_{0}\triangleleft_{0} x_{0}),)tex"},
      {"Z", "Z51", 1, R"tex(\omega_{3}(u_{1}, u_{0}) \triangleright_{3} v_{0} + (u_{1} \ast_{3} u_{0}) \ast_{3} v_{0}=u_{1}\triangleleft_{3} (\omega_{0}(u_{0}, v_{0}) + \omega_{0}(v_{0}, u_{0}))+ u_{1} \ast_{3} (u_{0} \ast_{0} v_{0}+v_{0} \ast_{0} u_{0}),)tex"},
      {"Z", "Z52", 1, R"tex((x_{1} \triangleright_{3} u_{0})\triangleleft_{3} x_{0}=x_{1} \triangleright_{3} (u_{0}\triangleleft_{0} x_{0}+x_{0} \triangleright_{0} u_{0}),)tex"},
      {"Z", "Z53", 1, R"tex((u_{1}\triangleleft_{3} x_{0})\triangleleft_{3} y_{0}=u_{1}\triangleleft_{3} (x_{0}\cdot y_{0}+y_{0}\cdot x_{0}),)tex"},
      {"Z", "Z54", 1, R"tex((u_{1} \ast_{3} u_{0})\triangleleft_{3} x_{0}=u_{1}\triangleleft_{3} (u_{0}\rightharpoonup_{0} x_{0}+x_{0} \leftharpoonup_{0} u_{0})+ u_{1} \ast_{3} (u_{0}\triangleleft_{0} x_{0}+x_{0} \triangleright_{0} u_{0}),)tex"},
      {"Z", "Z55", 1, R"tex((x_{0} \leftharpoonup_{2} u_{1})\cdot y_{0}+ (x_{0} \triangleright_{2} u_{1})\rightharpoonup_{3} y_{0}=x_{0}\cdot (u_{1}\rightharpoonup_{3} y_{0}+y_{0} \leftharpoonup_{2} u_{1})+ x_{0} \leftharpoonup_{2} (u_{1}\triangleleft_{3} y_{0}+y_{0} \triangleright_{2} u_{1}),)tex"},
      {"Z", "Z56", 1, R"tex((u_{0}\rightharpoonup_{2} x_{1})\cdot y_{0}+ (u_{0}\triangleleft_{2} x_{1})\rightharpoonup_{3} y_{0}= u_{0}\rightharpoonup_{2} (x_{1}\cdot y_{0}+y_{0}\cdot x_{1}),)tex"},
      {"Z", "Z57", 1, R"tex(\omega_{2}(u_{0}, u_{1})\cdot x_{0}+ (u_{0} \ast_{2} u_{1})\rightharpoonup_{3} x_{0}= u_{0}\rightharpoonup_{2} (u_{1}\rightharpoonup_{3} x_{0}+x_{0} \leftharpoonup_{2} u_{1})+ \omega_{2}(u_{0}, u_{1}\triangleleft_{3} x_{0}+ x_{0} \triangleright_{2} u_{1}),)tex"},
      {"Z", "Z58", 1, R"tex((x_{0}\cdot x_{1}) \leftharpoonup_{3} u_{0}=x_{0}\cdot (x_{1} \leftharpoonup_{3} u_{0}+u_{0}\rightharpoonup_{2} x_{1})+ x_{0} \leftharpoonup_{2} (x_{1} \triangleright_{3} u_{0}+u_{0}\triangleleft_{2} x_{1}),)tex"},
      {"Z", "Z59", 1, R"tex((x_{0} \leftharpoonup_{2} u_{1}) \leftharpoonup_{3} v_{0}+ \omega_{3}(x_{0} \triangleright_{2} u_{1}, v_{0})=x_{0}\cdot (\omega_{3}(u_{1}, v_{0})+ \omega_{2}(v_{0}, u_{1}))+ x_{0} \leftharpoonup_{2} (u_{1} \ast_{3} v_{0}+v_{0} \ast_{2} u_{1}),)tex"},
      {"Z", "Z60", 1, R"tex((u_{0}\rightharpoonup_{2} x_{1}) \leftharpoonup_{3} v_{0}+ \omega_{3}(u_{0}\triangleleft_{2} x_{1}, v_{0})= u_{0}\rightharpoonup_{2} (x_{1} \leftharpoonup_{3} v_{0}+v_{0}\rightharpoonup_{2} x_{1})+ \omega_{2}(u_{0}, x_{1} \triangleright_{3} v_{0}+v_{0}\triangleleft_{2} x_{1}) ,)tex"},
      {"Z", "Z61", 1, R"tex(\omega_{2}(u_{0}, u_{1}) \leftharpoonup_{3} v_{0}+ \omega_{3}(u_{0} \ast_{2} u_{1}, v_{0})=u_{0}\rightharpoonup_{2} (\omega_{3}(u_{1}, v_{0})+\omega_{2}(v_{0}, u_{1}))+ \omega_{2}(u_{0}, u_{1} \ast_{3} v_{0}+ v_{0} \ast_{2} u_{1}),)tex"},
      {"Z", "Z62", 1, R"tex((x_{0}\cdot x_{1}) \triangleright_{3} u_{0}=x_{0} \triangleright_{2} (x_{1} \triangleright_{3} u_{0}+u_{0}\triangleleft_{2} x_{1}),)tex"},
      {"Z", "Z63", 1, R"tex((x_{0} \leftharpoonup_{2} u_{1}) \triangleright_{3} v_{0}+ (x_{0} \triangleright_{2} u_{1}) \ast_{3} v_{0}=x_{0} \triangleright_{2} (u_{1} \ast_{3} v_{0}+v_{0} \ast_{2} u_{1}),)tex"},
      {"Z", "Z64", 1, R"tex((u_{0}\rightharpoonup_{2} x_{1}) \triangleright_{3} v_{0}+ (u_{0}\triangleleft_{2} x_{1}) \ast_{3} v_{0}=u_{0}\triangleleft_{2} (x_{1} \leftharpoonup_{3} v_{0}+v_{0}\rightharpoonup_{2} x_{1})+ u_{0} \ast_{2} (x_{1} \triangleright_{3} v_{0}+v_{0}\triangleleft_{2} x_{1}),)tex"},
      {"Z", "Z65", 1, R"tex(\omega_{2}(u_{0}, u_{1}) \triangleright_{3} v_{0}+ (u_{0} \ast_{2} u_{1}) \ast_{3} v_{0}=u_{0}\triangleleft_{2} (\omega_{3}(u_{1}, v_{0})+ \omega_{2}(v_{0}, u_{1}))+ u_{0} \ast_{2} (u_{1} \ast_{3} v_{0}+v_{0} \ast_{2} u_{1}),)tex"},
      {"Z", "Z66", 1, R"tex((x_{0} \triangleright_{2} u_{1})\triangleleft_{3} y_{0}=x_{0} \triangleright_{2} (u_{1}\triangleleft_{3} y_{0}+y_{0} \triangleright_{2} u_{1}),)tex"},
      {"Z", "Z67", 1, R"tex((u_{0}\triangleleft_{2} x_{1})\triangleleft_{3} y_{0}=u_{0}\triangleleft_{2} (x_{1}\cdot y_{0}+y_{0}\cdot x_{1}),)tex"},
      {"Z", "Z68", 1, R"tex((u_{0} \ast_{2} u_{1})\triangleleft_{3} y_{0}=u_{0}\triangleleft_{2} (u_{1}\rightharpoonup_{3} y_{0}+y_{0} \leftharpoonup_{2} u_{1})+ u_{0} \ast_{2} (u_{1}\triangleleft_{3} y_{0}+y_{0} \triangleright_{2} u_{1}),)tex"},
      {"Z", "Z69", 1, R"tex((x_{1} \leftharpoonup_{3} u_{0})\cdot y_{1}+ (x_{1} \triangleright_{3} u_{0})\rightharpoonup_{1} y_{1}=x_{1}\cdot (u_{0}\rightharpoonup_{2} y_{1}+y_{1} \leftharpoonup_{3} u_{0})+ x_{1} \leftharpoonup_{1} (u_{0}\triangleleft_{2} y_{1}+y_{1} \triangleright_{3} u_{0}),)tex"},
      {"Z", "Z70", 1, R"tex((u_{1}\rightharpoonup_{3} x_{0})\cdot x_{1} + (u_{1}\triangleleft_{3} x_{0})\rightharpoonup_{1} x_{1}=u_{1}\rightharpoonup_{1} (x_{0}\cdot x_{1}+x_{1}\cdot x_{0}),)tex"},
      {"Z", "Z71", 1, R"tex(\omega_{3}(u_{1}, u_{0})\cdot x_{1}+ (u_{1} \ast_{3} u_{0})\rightharpoonup_{1} x_{1}=u_{1}\rightharpoonup_{1} (u_{0}\rightharpoonup_{2} x_{1}+x_{1} \leftharpoonup_{3} u_{0})+ \omega_{1}(u_{1}, u_{0}\triangleleft_{2} x_{1}+ x_{1} \triangleright_{3} u_{0}),)tex"},
      {"Z", "Z72", 1, R"tex((x_{1}\cdot x_{0}) \leftharpoonup_{1} u_{1}=x_{1}\cdot (x_{0} \leftharpoonup_{2} u_{1}+u_{1}\rightharpoonup_{3} x_{0})+x_{1} \leftharpoonup_{1} (x_{0} \triangleright_{2} u_{1}+u_{1}\triangleleft_{3} x_{0}),)tex"},
      {"Z", "Z73", 1, R"tex((x_{1} \leftharpoonup_{3} u_{0}) \leftharpoonup_{1} u_{1}+ \omega_{1}(x_{1} \triangleright_{3} u_{0}, u_{1})=x_{1}\cdot (\omega_{2}(u_{0}, u_{1})+ \omega_{3}(u_{1}, u_{0})) + x_{1} \leftharpoonup_{1} (u_{0} \ast_{2} u_{1}+u_{1} \ast_{3} u_{0}) ,)tex"},
      {"Z", "Z74", 1, R"tex((u_{1}\rightharpoonup_{3} x_{0}) \leftharpoonup_{1} v_{1} + \omega_{1}(u_{1}\triangleleft_{3} x_{0}, v_{1})=u_{1}\rightharpoonup_{1} (x_{0} \leftharpoonup_{2} v_{1}+v_{1}\rightharpoonup_{3} x_{0}) + \omega_{1}(u_{1}, x_{0} \triangleright_{2} v_{1}+ v_{1}\triangleleft_{3} x_{0}),)tex"},
      {"Z", "Z75", 1, R"tex(\omega_{3}(u_{1}, u_{0}) \leftharpoonup_{1} v_{1}+ \omega_{1}(u_{1} \ast_{3} u_{0}, v_{1})=u_{1}\rightharpoonup_{1} (\omega_{2}(u_{0}, v_{1}) + \omega_{3}(v_{1}, u_{0})) + \omega_{1}(u_{1}, u_{0} \ast_{2} v_{1}+v_{1} \ast_{3} u_{0}),)tex"},
      {"Z", "Z76", 1, R"tex((x_{1}\cdot x_{0}) \triangleright_{1} u_{1}=x_{1} \triangleright_{1} (x_{0} \triangleright_{2} u_{1}+u_{1}\triangleleft_{3} x_{0}),)tex"},
      {"Z", "Z77", 1, R"tex((x_{1} \leftharpoonup_{3} u_{0}) \triangleright_{1} u_{1}+ (x_{1} \triangleright_{3} u_{0}) \ast_{1} u_{1}=x_{1} \triangleright_{1} (u_{0} \ast_{2} u_{1}+u_{1} \ast_{3} u_{0}),)tex"},
      {"Z", "Z78", 1, R"tex((u_{1}\rightharpoonup_{3} x_{0}) \triangleright_{1} v_{1} + (u_{1}\triangleleft_{3} x_{0}) \ast_{1} v_{1}=u_{1}\triangleleft_{1} (x_{0} \leftharpoonup_{2} v_{1}+v_{1}\rightharpoonup_{3} x_{0})+ u_{1} \ast_{1} (x_{0} \triangleright_{2} v_{1}+v_{1}\triangleleft_{3} x_{0}),)tex"},
      {"Z", "Z79", 1, R"tex(\omega_{3}(u_{1}, u_{0}) \triangleright_{1} v_{1} + (u_{1} \ast_{3} u_{0}) \ast_{1} v_{1}= u_{1}\triangleleft_{1} (\omega_{2}(u_{0}, v_{1})+ \omega_{3}(v_{1}, u_{0}))+ u_{1} \ast_{1} (u_{0} \ast_{2} v_{1}+v_{1} \ast_{3} u_{0}),)tex"},
      {"Z", "Z80", 1, R"tex((x_{1} \triangleright_{3} u_{0})\triangleleft_{1} y_{1}=x_{1} \triangleright_{1} (u_{0}\triangleleft_{2} y_{1}+y_{1} \triangleright_{3} u_{0}),)tex"},
      {"Z", "Z81", 1, R"tex((u_{1}\triangleleft_{3} x_{0})\triangleleft_{1} x_{1}=u_{1}\triangleleft_{1} (x_{0}\cdot x_{1}+x_{1}\cdot x_{0}),)tex"},
      {"Z", "Z82", 1, R"tex((u_{1} \ast_{3} u_{0})\triangleleft_{1} x_{1}=u_{1}\triangleleft_{1} (u_{0}\rightharpoonup_{2} x_{1}+x_{1} \leftharpoonup_{3} u_{0})+ u_{1} \ast_{1} (u_{0}\triangleleft_{2} x_{1}+x_{1} \triangleright_{3} u_{0}) ,)tex"},
      {"Z", "Z83", 1, R"tex((x_{1} \leftharpoonup_{1} u_{1})\cdot x_{0}+ (x_{1} \triangleright_{1} u_{1})\rightharpoonup_{3} x_{0}=x_{1}\cdot (u_{1}\rightharpoonup_{3} x_{0}+x_{0} \leftharpoonup_{2} u_{1})+ x_{1} \leftharpoonup_{1} (u_{1}\triangleleft_{3} x_{0}+x_{0} \triangleright_{2} u_{1}),)tex"},
      {"Z", "Z84", 1, R"tex((u_{1}\rightharpoonup_{1} x_{1})\cdot x_{0} + (u_{1}\triangleleft_{1} x_{1})\rightharpoonup_{3} x_{0}= u_{1}\rightharpoonup_{1} (x_{1}\cdot x_{0}+x_{0}\cdot x_{1}),)tex"},
      {"Z", "Z85", 1, R"tex(\omega_{1}(u_{1}, v_{1})\cdot x_{0} + (u_{1} \ast_{1} v_{1})\rightharpoonup_{3} x_{0}=u_{1}\rightharpoonup_{1} (v_{1}\rightharpoonup_{3} x_{0}+x_{0} \leftharpoonup_{2} v_{1})+ \omega_{1}(u_{1},v_{1}\triangleleft_{3} x_{0}+x_{0} \triangleright_{2} v_{1}),)tex"},
      {"Z", "Z86", 1, R"tex((x_{1}\cdot y_{1}) \leftharpoonup_{3} u_{0}=x_{1}\cdot (y_{1} \leftharpoonup_{3} u_{0}+u_{0}\rightharpoonup_{2} y_{1})+ x_{1} \leftharpoonup_{1} (y_{1} \triangleright_{3} u_{0}+u_{0}\triangleleft_{2} y_{1}),)tex"},
      {"Z", "Z87", 1, R"tex((x_{1} \leftharpoonup_{1} u_{1}) \leftharpoonup_{3} u_{0}+ \omega_{3}(x_{1} \triangleright_{1} u_{1}, u_{0})=x_{1}\cdot (\omega_{3}(u_{1}, u_{0})+\omega_{2}(u_{0}, u_{1}))+ x_{1} \leftharpoonup_{1} (u_{1} \ast_{3} u_{0}+u_{0} \ast_{2} u_{1}),)tex"},
      {"Z", "Z88", 1, R"tex((u_{1}\rightharpoonup_{1} x_{1}) \leftharpoonup_{3} u_{0} + \omega_{3}(u_{1}\triangleleft_{1} x_{1}, u_{0})= u_{1}\rightharpoonup_{1} (x_{1} \leftharpoonup_{3} u_{0}+u_{0}\rightharpoonup_{2} x_{1}) + \omega_{1}(u_{1}, x_{1} \triangleright_{3} u_{0}+u_{0}\triangleleft_{2} x_{1}),)tex"},
      {"Z", "Z89", 1, R"tex(\omega_{1}(u_{1}, v_{1}) \leftharpoonup_{3} u_{0}+ \omega_{3}(u_{1} \ast_{1} v_{1}, u_{0})=u_{1}\rightharpoonup_{1} (\omega_{3}(v_{1}, u_{0})+\omega_{2}(u_{0}, v_{1})) + \omega_{1}(u_{1},v_{1} \ast_{3} u_{0}+ u_{0} \ast_{2} v_{1}),)tex"},
      {"Z", "Z90", 1, R"tex((x_{1}\cdot y_{1}) \triangleright_{3} u_{0}=x_{1} \triangleright_{1} (y_{1} \triangleright_{3} u_{0}+u_{0}\triangleleft_{2} y_{1}),)tex"},
      {"Z", "Z91", 1, R"tex((x_{1} \leftharpoonup_{1} u_{1}) \triangleright_{3} u_{0}+ (x_{1} \triangleright_{1} u_{1}) \ast_{3} u_{0}=x_{1} \triangleright_{1} (u_{1} \ast_{3} u_{0}+u_{0} \ast_{2} u_{1}),)tex"},
      {"Z", "Z92", 1, R"tex((u_{1}\rightharpoonup_{1} x_{1}) \triangleright_{3} u_{0} + (u_{1}\triangleleft_{1} x_{1}) \ast_{3} u_{0}=u_{1}\triangleleft_{1} (x_{1} \leftharpoonup_{3} u_{0}+u_{0}\rightharpoonup_{2} x_{1})+ u_{1} \ast_{1} (x_{1} \triangleright_{3} u_{0}+u_{0}\triangleleft_{2} x_{1}),)tex"},
      {"Z", "Z93", 1, R"tex(\omega_{1}(u_{1}, v_{1}) \triangleright_{3} u_{0} + (u_{1} \ast_{1} v_{1}) \ast_{3} u_{0}=u_{1}\triangleleft_{1} (\omega_{3}(v_{1}, u_{0})+\omega_{2}(u_{0}, v_{1}))+ u_{1} \ast_{1} (v_{1} \ast_{3} u_{0}+u_{0} \ast_{2} v_{1}),)tex"},
      {"Z", "Z94", 1, R"tex((x_{1} \triangleright_{1} u_{1})\triangleleft_{3} x_{0}=x_{1} \triangleright_{1} (u_{1}\triangleleft_{3} x_{0}+x_{0} \triangleright_{2} u_{1}),)tex"},
      {"Z", "Z95", 1, R"tex((u_{1}\triangleleft_{1} x_{1})\triangleleft_{3} x_{0}=u_{1}\triangleleft_{1} (x_{1}\cdot x_{0}+x_{0}\cdot x_{1}),)tex"},
      {"Z", "Z96", 1, R"tex((u_{1} \ast_{1} v_{1})\triangleleft_{3} x_{0}=u_{1}\triangleleft_{1} (v_{1}\rightharpoonup_{3} x_{0}+x_{0} \leftharpoonup_{2} v_{1})+ u_{1} \ast_{1} (v_{1}\triangleleft_{3} x_{0}+x_{0} \triangleright_{2} v_{1}),)tex"},
      {"Z", "Z97", 1, R"tex(\varphi(x_{0} \leftharpoonup_{2} u_{1})+\sigma(x_{0} \triangleright_{2} u_{1})=x_{0}\cdot \sigma(u_{1}) + x_{0} \leftharpoonup_{0} d(u_{1}),)tex"},
      {"Z", "Z98", 1, R"tex(\varphi(u_{0}\rightharpoonup_{2} x_{1})+ \sigma(u_{0}\triangleleft_{2} x_{1})=u_{0}\rightharpoonup_{0} \varphi(x_{1}),)tex"},
      {"Z", "Z99", 1, R"tex(\varphi\omega_{2}(u_{0}, u_{1}) + \sigma(u_{0} \ast_{2} u_{1})=u_{0}\rightharpoonup_{0} \sigma(u_{1}) + \omega_{0}(u_{0}, d(u_{1})),)tex"},
      {"Z", "Z100", 1, R"tex(d(x_{0} \triangleright_{2} u_{1})=x_{0} \triangleright_{0} d(u_{1}),)tex"},
      {"Z", "Z101", 1, R"tex(d(u_{0}\triangleleft_{2} x_{1})= u_{0}\triangleleft_{0} \varphi(x_{1}),)tex"},
      {"Z", "Z102", 1, R"tex(d(u_{0} \ast_{2} u_{1})= u_{0}\triangleleft_{0}\sigma(u_{1}) + u_{0} \ast_{0} d(u_{1}),)tex"},
      {"Z", "Z103", 1, R"tex(\varphi(x_{1} \leftharpoonup_{3} u_{0})+\sigma(x_{1} \triangleright_{3} u_{0})=\varphi(x_{1})\leftharpoonup_{0} u_{0},)tex"},
      {"Z", "Z104", 1, R"tex(\varphi(u_{1}\rightharpoonup_{3} x_{0}) + \sigma(u_{1}\triangleleft_{3} x_{0})=\sigma(u_{1})\cdot x_{0}+ d(u_{1})\rightharpoonup_{0} x_{0},)tex"},
      {"Z", "Z105", 1, R"tex(\varphi\omega_{3}(u_{1}, u_{0}) + \sigma(u_{1} \ast_{3} u_{0})=\sigma(u_{1}) \leftharpoonup_{0} u_{0}+ \omega_{0}(d(u_{1}), u_{0}),)tex"},
      {"Z", "Z106", 1, R"tex(d(x_{1} \triangleright_{3} u_{0})=\varphi(x_{1})\triangleright_{0} u_{0},)tex"},
      {"Z", "Z107", 1, R"tex(d(u_{1}\triangleleft_{3} x_{0}) =d(u_{1})\triangleleft_{0} x_{0},)tex"},
      {"Z", "Z108", 1, R"tex(d(u_{1} \ast_{3} u_{0}))=\sigma(u_{1}) \triangleright_{0} u_{0} + d(u_{1}) \ast_{0} u_{0},)tex"},
      {"Z", "Z109", 1, R"tex(\sigma(u_{1})\cdot x_{1}+ d(u_{1})\rightharpoonup_{2} x_{1}=u_{1}\rightharpoonup_{1} x_{1},)tex"},
      {"Z", "Z110", 1, R"tex(\varphi(x_{1})\leftharpoonup_{2} u_{1}=x_{1} \leftharpoonup_{1} u_{1},)tex"},
      {"Z", "Z111", 1, R"tex(\sigma(u_{1}) \leftharpoonup_{2} v_{1} + \omega_{2}(d(u_{1}), v_{1})=\omega_{1}(u_{1}, v_{1}),)tex"},
      {"Z", "Z112", 1, R"tex(\varphi(x_{1})\triangleright_{2} u_{1}=x_{1} \triangleright_{1} u_{1},)tex"},
      {"Z", "Z113", 1, R"tex(\sigma(u_{1}) \triangleright_{2} v_{1} + d(u_{1}) \ast_{2} v_{1}=u_{1} \ast_{1} v_{1},)tex"},
      {"Z", "Z114", 1, R"tex(d(u_{1})\triangleleft_{2} x_{1} =u_{1}\triangleleft_{1} x_{1},)tex"},
      {"Z", "Z115", 1, R"tex(x_{1}\cdot \sigma(u_{1})+x_{1} \leftharpoonup_{3} d(u_{1})=x_{1} \leftharpoonup_{1} u_{1},)tex"},
      {"Z", "Z116", 1, R"tex(u_{1}\rightharpoonup_{3} \varphi(x_{1})=u_{1}\rightharpoonup_{1} x_{1},)tex"},
      {"Z", "Z117", 1, R"tex(u_{1}\rightharpoonup_{3}\sigma(v_{1}) + \omega_{3}(u_{1}, d(v_{1}))=\omega_{1}(u_{1}, v_{1}),)tex"},
      {"Z", "Z118", 1, R"tex(x_{1} \triangleright_{3} d(u_{1})=x_{1} \triangleright_{1} u_{1},)tex"},
      {"Z", "Z119", 1, R"tex(u_{1}\triangleleft_{3} \varphi(x_{1})=u_{1}\triangleleft_{1} x_{1},)tex"},
      {"Z", "Z120", 1, R"tex(u_{1}\triangleleft_{3}\sigma(v_{1}) + u_{1} \ast_{3} d(v_{1})=u_{1} \ast_{1} v_{1}.)tex"},
      {"ZZ", "ZZ1", 1, R"tex(( x_{0}\cdot y_{0} )\triangleright_{0} w_{0}=x_{0}\triangleright_{0}( y_{0}\triangleright_{0} w_{0}+w_{0}\triangleleft_{0} y_{0}),)tex"},
      {"ZZ", "ZZ1", 2, R"tex((x_{0}\triangleright_{0} v_{0})\triangleleft_{0} z_{0}=x_{0}\triangleright_{0}(v_{0}\triangleleft_{0} z_{0}+ z_{0}\triangleright_{0} v_{0}),)tex"},
      {"ZZ", "ZZ1", 3, R"tex((u_{0}\triangleleft_{0} y_{0})\triangleleft_{0} z_{0}=u_{0}\triangleleft_{0} (y_{0}\cdot z_{0}+ z_{0}\cdot y_{0}),)tex"},
      {"ZZ", "ZZ2", 1, R"tex((x_{0}\leftharpoonup_{0} v_{0})\cdot y_{0}+(x_{0} \triangleright_{0} v_{0})\rightharpoonup_{0} y_{0} =x_{0}\cdot (v_{0} \rightharpoonup_{0} y_{0}+y_{0} \leftharpoonup_{0} v_{0})+x_{0}\leftharpoonup_{0}( v_{0}\triangleleft_{0} y_{0} + y_{0} \triangleright_{0} v_{0}),)tex"},
      {"ZZ", "ZZ3", 1, R"tex((u_{0} \rightharpoonup_{0} x_{0})\cdot y_{0} +( u_{0}\triangleleft_{0} x_{0} )\rightharpoonup_{0} y_{0} = u_{0}\rightharpoonup_{0}( x_{0} \cdot y_{0} + y_{0}\cdot x_{0} ),)tex"},
      {"ZZ", "ZZ4", 1, R"tex(\omega_{0}(u_{0}, v_{0})\cdot x_{0}+ (u_{0} \ast_{0} v_{0} )\rightharpoonup_{0} x_{0} = u_{0}\rightharpoonup_{0}( v_{0}\rightharpoonup_{0} x_{0} + x_{0} \leftharpoonup_{0} v_{0})+ \omega_{0}(u_{0},v_{0}\triangleleft_{0} x_{0}+ x_{0} \triangleright_{0} v_{0}),)tex"},
      {"ZZ", "ZZ5", 1, R"tex((u_{0} \ast_{0} v_{0})\triangleleft_{0} x_{0} = u_{0}\triangleleft_{0}( v_{0}\rightharpoonup_{0} x_{0}+x_{0}\leftharpoonup_{0} v_{0})+u_{0} \ast_{0}( v_{0}\triangleleft_{0} x_{0} + x_{0} \triangleright_{0} v_{0} ),)tex"},
      {"ZZ", "ZZ6", 1, R"tex(( x_{0}\cdot y_{0} )\leftharpoonup_{0} w_{0} = x_{0}\cdot(y_{0} \leftharpoonup_{0} w_{0}+w_{0}\rightharpoonup_{0} y_{0})+x_{0}\leftharpoonup_{0}(y_{0} \triangleright_{0} w_{0}+w_{0}\triangleleft_{0} y_{0}),)tex"},
      {"ZZ", "ZZ7", 1, R"tex(( x_{0} \leftharpoonup_{0} v_{0})\leftharpoonup_{0} w_{0}+\omega_{0}(x_{0} \triangleright_{0} v_{0},w_{0}) =x_{0}\cdot\big(\omega_{0}(v_{0}, w_{0})+\omega_{0}(w_{0},v_{0})\big)+x_{0}\leftharpoonup_{0}(v_{0} \ast_{0} w_{0} +w_{0} \ast_{0} v_{0} ),)tex"},
      {"ZZ", "ZZ8", 1, R"tex((x_{0} \leftharpoonup_{0} v_{0}) \triangleright_{0} w_{0}+(x_{0}\triangleright_{0} v_{0})\ast_{0} w_{0} = x_{0}\triangleright_{0}( v_{0} \ast_{0} w_{0}+w_{0} \ast_{0} v_{0} ),)tex"},
      {"ZZ", "ZZ9", 1, R"tex(( u_{0}\rightharpoonup_{0} x_{0})\leftharpoonup_{0} w_{0}+\omega_{0}( u_{0}\triangleleft_{0} x_{0},w_{0}) = u_{0}\rightharpoonup_{0}( x_{0} \leftharpoonup_{0} w_{0}+w_{0}\rightharpoonup_{0} x_{0} )+\omega_{0}(u_{0}, w_{0}\triangleleft_{0} x_{0} + x_{0}\triangleright_{0} w_{0}),)tex"},
      {"ZZ", "ZZ10", 1, R"tex((u_{0}\rightharpoonup_{0} x_{0}) \triangleright_{0} w_{0}+ (u_{0}\triangleleft_{0} x_{0})\ast_{0} w_{0} = u_{0}\triangleleft_{0}(x_{0} \leftharpoonup_{0} w_{0} + w_{0}\rightharpoonup_{0} x_{0} )+u_{0} \ast_{0}(x_{0} \triangleright_{0} w_{0} + w_{0}\triangleleft_{0} x_{0}),)tex"},
      {"ZZ", "ZZ11", 1, R"tex(\omega_{0}(u_{0}, v_{0})\leftharpoonup_{0} w_{0}+\omega_{0}( u_{0} \ast_{0} v_{0} ,w_{0} ) =u_{0}\rightharpoonup_{0}\big(\omega_{0}(v_{0}, w_{0})+\omega_{0}(w_{0},v_{0})\big)+ \omega_{0}(u_{0},v_{0} \ast_{0} w_{0}+ w_{0} \ast_{0} v_{0} ),)tex"},
      {"ZZ", "ZZ12", 1, R"tex(\omega_{0}(u_{0}, v_{0}) \triangleright_{0} w_{0}+(u_{0} \ast_{0} v_{0})\ast_{0} w_{0} =u_{0}\triangleleft_{0} \b0g(\omega_{0}(v_{0}, w_{0})+\omega_{0}(w_{0},v_{0})\b0g)+u_{0} \ast_{0}(v_{0} \ast_{0} w_{0}+w_{0} \ast_{0} v_{0}),)tex"},
      {"ZZ", "ZZ13", 1, R"tex(( x_{0} \triangleright_{2} u_{1}) \ast_{1} v_{1}=x_{0} \triangleright_{2} (u_{1} \ast_{1} v_{1}+v_{1} \ast_{1} u_{1}),)tex"},
      {"ZZ", "ZZ14", 1, R"tex((u_{0} \ast_{2} u_{1}) \ast_{1} v_{1}=u_{0} \ast_{2} (u_{1} \ast_{1} v_{1}+v_{1} \ast_{1} u_{1}) \big),)tex"},
      {"ZZ", "ZZ15", 1, R"tex((x_{0}\cdot y_{0}) \triangleright_{2} u_{1}=x_{0} \triangleright_{2} (y_{0} \triangleright_{2} u_{1}+u_{1}\triangleleft_{3} y_{0}),)tex"},
      {"ZZ", "ZZ16", 1, R"tex((x_{0} \leftharpoonup_{0} u_{0}) \triangleright_{2} u_{1} + (x_{0} \triangleright_{0} u_{0}) \ast_{2} u_{1}=x_{0} \triangleright_{2} (u_{0} \ast_{2} u_{1}+u_{1} \ast_{3} u_{0}),)tex"},
      {"ZZ", "ZZ17", 1, R"tex((u_{0}\rightharpoonup_{0} x_{0}) \triangleright_{2} u_{1}+ (u_{0}\triangleleft_{0} x_{0}) \ast_{2} u_{1}=u_{0} \ast_{2} (x_{0} \triangleright_{2} u_{1}+u_{1}\triangleleft_{3} x_{0}),)tex"},
      {"ZZ", "ZZ18", 1, R"tex(\omega_{0}(u_{0}, v_{0}) \triangleright_{2} u_{1}+ (u_{0} \ast_{0} v_{0}) \ast_{2} u_{1}=u_{0} \ast_{2} (v_{0} \ast_{2} u_{1}+u_{1} \ast_{3} v_{0}),)tex"},
      {"ZZ", "ZZ19", 1, R"tex((u_{1}\triangleleft_{3} x_{0}) \ast_{3} u_{0}=u_{1} \ast_{3} (x_{0} \triangleright_{0} u_{0}+u_{0}\triangleleft_{0} x_{0}),)tex"},
      {"ZZ", "ZZ20", 1, R"tex((u_{1} \ast_{3} u_{0}) \ast_{3} v_{0}=u_{1}\triangleleft_{3} (\omega_{0}(u_{0}, v_{0}) + \omega_{0}(v_{0}, u_{0}))+ u_{1} \ast_{3} (u_{0} \ast_{0} v_{0}+v_{0} \ast_{0} u_{0}),)tex"},
      {"ZZ", "ZZ21", 1, R"tex((u_{1}\triangleleft_{3} x_{0})\triangleleft_{3} y_{0}=u_{1}\triangleleft_{3} (x_{0}\cdot y_{0}+y_{0}\cdot x_{0}),)tex"},
      {"ZZ", "ZZ22", 1, R"tex((u_{1} \ast_{3} u_{0})\triangleleft_{3} x_{0}=u_{1}\triangleleft_{3} (u_{0}\rightharpoonup_{0} x_{0}+x_{0} \leftharpoonup_{0} u_{0})+ u_{1} \ast_{3} (u_{0}\triangleleft_{0} x_{0}+x_{0} \triangleright_{0} u_{0}),)tex"},
      {"ZZ", "ZZ23", 1, R"tex((x_{0} \triangleright_{2} u_{1}) \ast_{3} v_{0}=x_{0} \triangleright_{2} (u_{1} \ast_{3} v_{0}+v_{0} \ast_{2} u_{1}),)tex"},
      {"ZZ", "ZZ24", 1, R"tex((u_{0} \ast_{2} u_{1}) \ast_{3} v_{0}= u_{0} \ast_{2} (u_{1} \ast_{3} v_{0}+v_{0} \ast_{2} u_{1}),)tex"},
      {"ZZ", "ZZ25", 1, R"tex((x_{0} \triangleright_{2} u_{1})\triangleleft_{3} y_{0}=x_{0} \triangleright_{2} (u_{1}\triangleleft_{3} y_{0}+y_{0} \triangleright_{2} u_{1}),)tex"},
      {"ZZ", "ZZ26", 1, R"tex((u_{0} \ast_{2} u_{1})\triangleleft_{3} y_{0}=u_{0} \ast_{2} (u_{1}\triangleleft_{3} y_{0}+y_{0} \triangleright_{2} u_{1}),)tex"},
      {"ZZ", "ZZ27", 1, R"tex((u_{1}\triangleleft_{3} x_{0}) \ast_{1} v_{1}=u_{1} \ast_{1} (x_{0} \triangleright_{2} v_{1}+v_{1}\triangleleft_{3} x_{0}),)tex"},
      {"ZZ", "ZZ28", 1, R"tex((u_{1} \ast_{3} u_{0}) \ast_{1} v_{1}= u_{1} \ast_{1} (u_{0} \ast_{2} v_{1}+v_{1} \ast_{3} u_{0}),)tex"},
      {"ZZ", "ZZ29", 1, R"tex((u_{1} \ast_{1} v_{1}) \ast_{3} u_{0}=u_{1} \ast_{1} (v_{1} \ast_{3} u_{0}+u_{0} \ast_{2} v_{1}),)tex"},
      {"ZZ", "ZZ30", 1, R"tex((u_{1} \ast_{1} v_{1})\triangleleft_{3} x_{0}=u_{1} \ast_{1} (v_{1}\triangleleft_{3} x_{0}+x_{0} \triangleright_{2} v_{1}),)tex"},
      {"ZZ", "ZZ31", 1, R"tex(\sigma(x_{0} \triangleright_{2} u_{1})=x_{0}\cdot \sigma(u_{1}) + x_{0} \leftharpoonup_{0} d(u_{1}),)tex"},
      {"ZZ", "ZZ32", 1, R"tex(\sigma(u_{0} \ast_{2} u_{1})=u_{0}\rightharpoonup_{0} \sigma(u_{1}) + \omega_{0}(u_{0}, d(u_{1})),)tex"},
      {"ZZ", "ZZ33", 1, R"tex(d(x_{0} \triangleright_{2} u_{1})=x_{0} \triangleright_{0} d(u_{1}),)tex"},
      {"ZZ", "ZZ34", 1, R"tex(d(u_{0} \ast_{2} u_{1})= u_{0}\triangleleft_{0}\sigma(u_{1}) + u_{0} \ast_{0} d(u_{1}),)tex"},
      {"ZZ", "ZZ35", 1, R"tex(\sigma(u_{1}\triangleleft_{3} x_{0})=\sigma(u_{1})\cdot x_{0}+ d(u_{1})\rightharpoonup_{0} x_{0},)tex"},
      {"ZZ", "ZZ36", 1, R"tex(\sigma(u_{1} \ast_{3} u_{0})=\sigma(u_{1}) \leftharpoonup_{0} u_{0}+ \omega_{0}(d(u_{1}), u_{0}),)tex"},
      {"ZZ", "ZZ37", 1, R"tex(d(u_{1}\triangleleft_{3} x_{0}) =d(u_{1})\triangleleft_{0} x_{0},)tex"},
      {"ZZ", "ZZ38", 1, R"tex(d(u_{1} \ast_{3} u_{0}))=\sigma(u_{1}) \triangleright_{0} u_{0} + d(u_{1}) \ast_{0} u_{0},)tex"},
      {"ZZ", "ZZ39", 1, R"tex(\sigma(u_{1}) \triangleright_{2} v_{1} + d(u_{1}) \ast_{2} v_{1}=u_{1} \ast_{1} v_{1},)tex"},
      {"ZZ", "ZZ40", 1, R"tex(u_{1}\triangleleft_{3}\sigma(v_{1}) + u_{1} \ast_{3} d(v_{1})=u_{1} \ast_{1} v_{1}.)tex"},
      {"H", "H1", 1, R"tex(x_{i} \leftharpoonup_{i} v_{i}+r_{i}(x_{i} \triangleright_{i} v_{i})=x_{i}\cdot^{\prime} r_{i}(v_{i})+ x_{i}\leftharpoonup_{i}^{\prime} s_{i}(v_{i}),)tex"},
      {"H", "H2", 1, R"tex(u_{i}\rightharpoonup_{i} y_{i}+ r_{i}(u_{i}\triangleleft_{i} y_{i})=r_{i}(u_{i})\cdot^{\prime} y_{i}+ s_{i}(u_{i})\rightharpoonup_{i}^{\prime} y_{i},)tex"},
      {"H", "H3", 1, R"tex(\omega_{i}(u_{i}, v_{i})+ r_{i}(u_{i} \ast_{i} v_{i})=r_{i}(u_{i})\cdot^{\prime} r_{i}(v_{i})+r_{i}(u_{i}) \leftharpoonup_{i}^{\prime} s_{i}(v_{i})+s_{i}(u_{i})\rightharpoonup_{i}^{\prime}r_{i}(v_{i})+ \omega_{i}^{\prime}(s_{i}(u_{i}), s_{i}(v_{i})),)tex"},
      {"H", "H4", 1, R"tex(s_{i}(x_{i} \triangleright_{i} v_{i})=x_{i}\triangleright_{i}^{\prime} s_{i}(v_{i}))tex"},
      {"H", "H5", 1, R"tex(s_{i}(u_{i}\triangleleft_{i} y_{i})=s_{i}(u_{i})\triangleleft_{i}^{\prime} y_{i},)tex"},
      {"H", "H6", 1, R"tex(s_{i}(u_{i} \ast_{i} v_{i}))=r_{i}(u_{i}) \triangleright_{i}^{\prime} s_{i}(v_{i})+s_{i}(u_{i})\triangleleft_{i}^{\prime}r_{i}(v_{i})+ s_{i}(u_{i}) \ast_{i}^{\prime} s_{i}(v_{i}),)tex"},
      {"H", "H7", 1, R"tex(\varphi(r_{1}(u_{1}))+\sigma^{\prime}(x_{1})+\sigma^{\prime}r_{1}(u_{1})=\sigma(u_{1})+r_{0}d(u_{1}),)tex"},
      {"H", "H8", 1, R"tex(ds_{1}(u_{1})=s_{0}d(u_{1}),)tex"},
      {"H", "H9", 1, R"tex(x_{0} \leftharpoonup_{2} u_{1}+r_{1}(x_{0} \triangleright_{2} u_{1})-x_{0}\cdot^{\prime}r_{1}(u_{1})-x_{0}\leftharpoonup^{\prime}_{2} s_{1}(u_{1})=0,)tex"},
      {"H", "H10", 1, R"tex(u_{0}\rightharpoonup_{2} x_{1}+ r_{1}(u_{0}\triangleleft_{2} x_{1})-r_{0}(u_{0})\cdot^{\prime} x_{1}-s_{0}(u_{0})\rightharpoonup^{\prime}_{2} x_{1}=0,)tex"},
      {"H", "H11", 1, R"tex(\omega_{2}(u_{0}, u_{1})+ r_{1}(u_{0} \ast_{2} u_{1})-r_{0}(u_{0})\cdot^{\prime} r_{1}(u_{1})-r_{0}(u_{0}) \leftharpoonup^{\prime}_{2} s_{1}(u_{1})-s_{0}(u_{0})\rightharpoonup^{\prime}_{2}r_{1}(u_{1})-\omega^{\prime}_{2}(s_{0}(u_{0}), s_{1}(u_{1}))=0,)tex"},
      {"H", "H12", 1, R"tex(s_{1}(x_{0} \triangleright_{2} u_{1})-x_{0}\triangleright^{\prime}_{2} s_{1}(u_{1})=0,)tex"},
      {"H", "H13", 1, R"tex(s_{1}(u_{0}\triangleleft_{2} x_{1})-s_{0}(u_{0})\triangleleft^{\prime}_{2} x_{1}=0,)tex"},
      {"H", "H14", 1, R"tex(s_{1}(u_{0} \ast_{2} u_{1}))-r_{0}(u_{0}) \triangleright^{\prime}_{2} s_{1}(u_{1})-s_{0}(u_{0})\triangleleft^{\prime}_{2}r_{1}(u_{1}) -s_{0}(u_{0}) \ast^{\prime}_{2} s_{1}(u_{1})=0,)tex"},
      {"H", "H15", 1, R"tex(x_{1} \leftharpoonup_{3} u_{0}+r_{1}(x_{1} \triangleright_{3} u_{0})=x_{1}\cdot^{\prime}r_{0}(u_{0}) + x_{1}\leftharpoonup^{\prime}_{3} s_{0}(u_{0}),)tex"},
      {"H", "H16", 1, R"tex(u_{1}\rightharpoonup_{3} x_{0} + r_{1}(u_{1}\triangleleft_{3} x_{0})=r_{1}(u_{1})\cdot^{\prime} x_{0}+ s_{1}(u_{1})\rightharpoonup^{\prime}_{3} x_{0},)tex"},
      {"H", "H17", 1, R"tex(\omega_{3}(u_{1}, u_{0}) + r_{1}(u_{1} \ast_{3} u_{0})=r_{1}(u_{1})\cdot^{\prime}r_{0}(u_{0})+r_{1}(u_{1}) \leftharpoonup^{\prime}_{3} s_{0}(u_{0})+s_{1}(u_{1})\rightharpoonup^{\prime}_{3}r_{0}(u_{0}) + \omega^{\prime}_{3}(s_{1}(u_{1}), s_{0}(u_{0})),)tex"},
      {"H", "H18", 1, R"tex(s_{1}(x_{1} \triangleright_{3} u_{0})=x_{1}\triangleright^{\prime}_{3} s_{0}(u_{0}),)tex"},
      {"H", "H19", 1, R"tex(s_{1}(u_{1}\triangleleft_{3} x_{0})=s_{1}(u_{1})\triangleleft^{\prime}_{3} x_{0},)tex"},
      {"H", "H20", 1, R"tex(s_{1}(u_{1} \ast_{3} u_{0}))=r_{1}(u_{1}) \triangleright^{\prime}_{3} s_{0}(u_{0})+s_{1}(u_{1})\triangleleft^{\prime}_{3}r_{0}(u_{0}) + s_{1}(u_{1}) \ast^{\prime}_{3} s_{0}(u_{0}).)tex"},
      {"CZ", "CZ1", 1, R"tex((x_{i}\leftharpoonup_{i} v_{i})\cdot y_{i}=x_{i}\cdot (v_{i} \rightharpoonup_{i} y_{i}+y_{i} \leftharpoonup_{i} v_{i}),)tex"},
      {"CZ", "CZ2", 1, R"tex((u_{i} \rightharpoonup_{i} x_{i})\cdot y_{i}= u_{i}\rightharpoonup_{i}( x_{i} \cdot y_{i} + y_{i}\cdot x_{i} ),)tex"},
      {"CZ", "CZ3", 1, R"tex(\omega_{i}(u_{i}, v_{i})\cdot x_{i}+ (u_{i} \ast_{i} v_{i} )\rightharpoonup_{i} x_{i} = u_{i}\rightharpoonup_{i}( v_{i}\rightharpoonup_{i} x_{i} + x_{i} \leftharpoonup_{i} v_{i}),)tex"},
      {"CZ", "CZ4", 1, R"tex(( x_{i}\cdot y_{i} )\leftharpoonup_{i} w_{i} = x_{i}\cdot(y_{i} \leftharpoonup_{i} w_{i}+w_{i}\rightharpoonup_{i} y_{i}),)tex"},
      {"CZ", "CZ5", 1, R"tex(( x_{i} \leftharpoonup_{i} v_{i})\leftharpoonup_{i} w_{i} =x_{i}\cdot\big(\omega_{i}(v_{i}, w_{i})+\omega_{i}(w_{i},v_{i})\big)+x_{i}\leftharpoonup_{i}(v_{i} \ast_{i} w_{i} +w_{i} \ast_{i} v_{i} ),)tex"},
      {"CZ", "CZ6", 1, R"tex(( u_{i}\rightharpoonup_{i} x_{i})\leftharpoonup_{i} w_{i} = u_{i}\rightharpoonup_{i}( x_{i} \leftharpoonup_{i} w_{i}+w_{i}\rightharpoonup_{i} x_{i} ),)tex"},
      {"CZ", "CZ7", 1, R"tex(\omega_{i}(u_{i}, v_{i})\leftharpoonup_{i} w_{i}+\omega_{i}( u_{i} \ast_{i} v_{i} ,w_{i} ) =u_{i}\rightharpoonup_{i}\big(\omega_{i}(v_{i}, w_{i})+\omega_{i}(w_{i},v_{i})\big)+ \omega_{i}(u_{i},v_{i} \ast_{i} w_{i}+ w_{i} \ast_{i} v_{i} ),)tex"},
      {"CZ", "CZ8", 1, R"tex((x_{0}\cdot x_{1}) \leftharpoonup_{1} u_{1}=x_{0}\cdot (x_{1} \leftharpoonup_{1}u_{1}+u_{1}\rightharpoonup_{1} x_{1}),)tex"},
      {"CZ", "CZ9", 1, R"tex((x_{0} \leftharpoonup_{2} u_{1})\cdot x_{1} =x_{0}\cdot (u_{1}\rightharpoonup_{1}x_{1}+x_{1} \leftharpoonup_{1}u_{1}),)tex"},
      {"CZ", "CZ10", 1, R"tex((x_{0} \leftharpoonup_{2} u_{1}) \leftharpoonup_{1} v_{1}=x_{0}\cdot (\omega_{1}(u_{1}, v_{1})+\omega_{1}(v_{1}, u_{1}))+x_{0} \leftharpoonup_{2} (u_{1} \ast_{1} v_{1}+v_{1} \ast_{1} u_{1}),)tex"},
      {"CZ", "CZ11", 1, R"tex((u_{0}\rightharpoonup_{2} x_{1})\cdot y_{1}=u_{0}\rightharpoonup_{2} ( x_{1}\cdot y_{1}+y_{1}\cdot x_{1}),)tex"},
      {"CZ", "CZ12", 1, R"tex((u_{0}\rightharpoonup_{2} x_{1}) \leftharpoonup_{1}u_{1}=u_{0}\rightharpoonup_{2} (x_{1} \leftharpoonup_{1}u_{1}+u_{1}\rightharpoonup_{1} x_{1}),)tex"},
      {"CZ", "CZ13", 1, R"tex(\omega_{2}(u_{0}, u_{1})\cdot x_{1} + (u_{0} \ast_{2} u_{1})\rightharpoonup_{1} x_{1}=u_{0}\rightharpoonup_{2} (u_{1}\rightharpoonup_{1} x_{1}+x_{1} \leftharpoonup_{1} u_{1}),)tex"},
      {"CZ", "CZ14", 1, R"tex(\omega_{2}(u_{0}, u_{1}) \leftharpoonup_{1} v_{1} + \omega_{1}(u_{0} \ast_{2} u_{1}, v_{1})=u_{0}\rightharpoonup_{2} (\omega_{1}(u_{1}, v_{1})+\omega_{1}(v_{1}, u_{1}))+ \omega_{2}(u_{0},u_{1} \ast_{1} v_{1}+ v_{1} \ast_{1} u_{1}),)tex"},
      {"CZ", "CZ15", 1, R"tex((x_{0} \leftharpoonup_{0} u_{0})\cdot x_{1}=x_{0}\cdot (u_{0}\rightharpoonup_{2} x_{1}+x_{1} \leftharpoonup_{3} u_{0}),)tex"},
      {"CZ", "CZ16", 1, R"tex((u_{0}\rightharpoonup_{0} x_{0})\cdot x_{1}=u_{0}\rightharpoonup_{2} (x_{0}\cdot x_{1}+x_{1}\cdot x_{0}),)tex"},
      {"CZ", "CZ17", 1, R"tex(\omega_{0}(u_{0}, v_{0})\cdot x_{1}+ (u_{0} \ast_{0} v_{0})\rightharpoonup_{2} x_{1}= u_{0}\rightharpoonup_{2} (v_{0}\rightharpoonup_{2} x_{1}+x_{1} \leftharpoonup_{3} v_{0}),)tex"},
      {"CZ", "CZ18", 1, R"tex((x_{0}\cdot y_{0}) \leftharpoonup_{2} u_{1}=x_{0}\cdot (y_{0} \leftharpoonup_{2} u_{1}+u_{1}\rightharpoonup_{3} y_{0}),)tex"},
      {"CZ", "CZ19", 1, R"tex((x_{0} \leftharpoonup_{0} u_{0}) \leftharpoonup_{2} u_{1}=x_{0}\cdot (\omega_{2}(u_{0}, u_{1})+ \omega_{3}(u_{1}, u_{0})) + x_{0} \leftharpoonup_{2} (u_{0} \ast_{2} u_{1}+u_{1} \ast_{3} u_{0}),)tex"},
      {"CZ", "CZ20", 1, R"tex((u_{0}\rightharpoonup_{0} x_{0}) \leftharpoonup_{2} u_{1}= u_{0}\rightharpoonup_{2} (x_{0} \leftharpoonup_{2} u_{1}+u_{1}\rightharpoonup_{3} x_{0}),)tex"},
      {"CZ", "CZ21", 1, R"tex(\omega_{0}(u_{0}, v_{0}) \leftharpoonup_{2} u_{1}+ \omega_{2}(u_{0} \ast_{0} v_{0}, u_{1})= u_{0}\rightharpoonup_{2} (\omega_{2}(v_{0}, u_{1}) + \omega_{3}(u_{1}, v_{0}))+ \omega_{2}(u_{0},v_{0} \ast_{2} u_{1}+u_{1} \ast_{3} v_{0}),)tex"},
      {"CZ", "CZ22", 1, R"tex((x_{1} \leftharpoonup_{3} u_{0})\cdot x_{0}=x_{1}\cdot (u_{0}\rightharpoonup_{0} x_{0}+x_{0} \leftharpoonup_{0} u_{0}) ,)tex"},
      {"CZ", "CZ23", 1, R"tex((u_{1}\rightharpoonup_{3} x_{0})\cdot y_{0} =u_{1}\rightharpoonup_{3} (x_{0}\cdot y_{0}+y_{0}\cdot x_{0}),)tex"},
      {"CZ", "CZ24", 1, R"tex(\omega_{3}(u_{1}, u_{0})\cdot x_{0} + (u_{1} \ast_{3} u_{0})\rightharpoonup_{3} x_{0}=u_{1}\rightharpoonup_{3} (u_{0}\rightharpoonup_{0} x_{0}+x_{0} \leftharpoonup_{0} u_{0}),)tex"},
      {"CZ", "CZ25", 1, R"tex((x_{1}\cdot x_{0}) \leftharpoonup_{3} u_{0}=x_{1}\cdot (x_{0} \leftharpoonup_{0} u_{0}+u_{0}\rightharpoonup_{0} x_{0}),)tex"},
      {"CZ", "CZ26", 1, R"tex((x_{1} \leftharpoonup_{3} u_{0}) \leftharpoonup_{3} v_{0}=x_{1}\cdot (\omega_{0}(u_{0}, v_{0})+\omega_{0}(v_{0}, u_{0}))+ x_{1} \leftharpoonup_{3} (u_{0} \ast_{0} v_{0}+v_{0} \ast_{0} u_{0}),)tex"},
      {"CZ", "CZ27", 1, R"tex((u_{1}\rightharpoonup_{3} x_{0}) \leftharpoonup_{3} u_{0} =u_{1}\rightharpoonup_{3} (x_{0} \leftharpoonup_{0} u_{0}+u_{0}\rightharpoonup_{0} x_{0}),)tex"},
      {"CZ", "CZ28", 1, R"tex(\omega_{3}(u_{1}, u_{0}) \leftharpoonup_{3} v_{0} + \omega_{3}(u_{1} \ast_{3} u_{0}, v_{0})=u_{1}\rightharpoonup_{3} (\omega_{0}(u_{0}, v_{0})+ \omega_{0}(v_{0}, u_{0})) + \omega_{3}(u_{1},u_{0} \ast_{0} v_{0}+v_{0} \ast_{0} u_{0}),)tex"},
      {"CZ", "CZ29", 1, R"tex((x_{0} \leftharpoonup_{2} u_{1})\cdot y_{0}=x_{0}\cdot (u_{1}\rightharpoonup_{3} y_{0}+y_{0} \leftharpoonup_{2} u_{1}),)tex"},
      {"CZ", "CZ30", 1, R"tex((u_{0}\rightharpoonup_{2} x_{1})\cdot y_{0}= u_{0}\rightharpoonup_{2} (x_{1}\cdot y_{0}+y_{0}\cdot x_{1}),)tex"},
      {"CZ", "CZ31", 1, R"tex(\omega_{2}(u_{0}, u_{1})\cdot x_{0}+ (u_{0} \ast_{2} u_{1})\rightharpoonup_{3} x_{0}= u_{0}\rightharpoonup_{2} (u_{1}\rightharpoonup_{3} x_{0}+x_{0} \leftharpoonup_{2} u_{1}),)tex"},
      {"CZ", "CZ32", 1, R"tex((x_{0}\cdot x_{1}) \leftharpoonup_{3} u_{0}=x_{0}\cdot (x_{1} \leftharpoonup_{3} u_{0}+u_{0}\rightharpoonup_{2} x_{1}),)tex"},
      {"CZ", "CZ33", 1, R"tex((x_{0} \leftharpoonup_{2} u_{1}) \leftharpoonup_{3} v_{0}=x_{0}\cdot (\omega_{3}(u_{1}, v_{0})+ \omega_{2}(v_{0}, u_{1}))+ x_{0} \leftharpoonup_{2} (u_{1} \ast_{3} v_{0}+v_{0} \ast_{2} u_{1}),)tex"},
      {"CZ", "CZ34", 1, R"tex((u_{0}\rightharpoonup_{2} x_{1}) \leftharpoonup_{3} v_{0}= u_{0}\rightharpoonup_{2} (x_{1} \leftharpoonup_{3} v_{0}+v_{0}\rightharpoonup_{2} x_{1}) ,)tex"},
      {"CZ", "CZ35", 1, R"tex(\omega_{2}(u_{0}, u_{1}) \leftharpoonup_{3} v_{0}+ \omega_{3}(u_{0} \ast_{2} u_{1}, v_{0})=u_{0}\rightharpoonup_{2} (\omega_{3}(u_{1}, v_{0})+\omega_{2}(v_{0}, u_{1}))+ \omega_{2}(u_{0}, u_{1} \ast_{3} v_{0}+ v_{0} \ast_{2} u_{1}),)tex"},
      {"CZ", "CZ36", 1, R"tex((x_{1} \leftharpoonup_{3} u_{0})\cdot y_{1}=x_{1}\cdot (u_{0}\rightharpoonup_{2} y_{1}+y_{1} \leftharpoonup_{3} u_{0}),)tex"},
      {"CZ", "CZ37", 1, R"tex((u_{1}\rightharpoonup_{3} x_{0})\cdot x_{1}=u_{1}\rightharpoonup_{1} (x_{0}\cdot x_{1}+x_{1}\cdot x_{0}),)tex"},
      {"CZ", "CZ38", 1, R"tex(\omega_{3}(u_{1}, u_{0})\cdot x_{1}+ (u_{1} \ast_{3} u_{0})\rightharpoonup_{1} x_{1}=u_{1}\rightharpoonup_{1} (u_{0}\rightharpoonup_{2} x_{1}+x_{1} \leftharpoonup_{3} u_{0}),)tex"},
      {"CZ", "CZ39", 1, R"tex((x_{1}\cdot x_{0}) \leftharpoonup_{1} u_{1}=x_{1}\cdot (x_{0} \leftharpoonup_{2} u_{1}+u_{1}\rightharpoonup_{3} x_{0}),)tex"},
      {"CZ", "CZ40", 1, R"tex((x_{1} \leftharpoonup_{3} u_{0}) \leftharpoonup_{1} u_{1}=x_{1}\cdot (\omega_{2}(u_{0}, u_{1})+ \omega_{3}(u_{1}, u_{0})) + x_{1} \leftharpoonup_{1} (u_{0} \ast_{2} u_{1}+u_{1} \ast_{3} u_{0}) ,)tex"},
      {"CZ", "CZ41", 1, R"tex((u_{1}\rightharpoonup_{3} x_{0}) \leftharpoonup_{1} v_{1}=u_{1}\rightharpoonup_{1} (x_{0} \leftharpoonup_{2} v_{1}+v_{1}\rightharpoonup_{3} x_{0}) ,)tex"},
      {"CZ", "CZ42", 1, R"tex(\omega_{3}(u_{1}, u_{0}) \leftharpoonup_{1} v_{1}+ \omega_{1}(u_{1} \ast_{3} u_{0}, v_{1})=u_{1}\rightharpoonup_{1} (\omega_{2}(u_{0}, v_{1}) + \omega_{3}(v_{1}, u_{0})) + \omega_{1}(u_{1}, u_{0} \ast_{2} v_{1}+v_{1} \ast_{3} u_{0}),)tex"},
      {"CZ", "CZ43", 1, R"tex((x_{1} \leftharpoonup_{1} u_{1})\cdot x_{0}=x_{1}\cdot (u_{1}\rightharpoonup_{3} x_{0}+x_{0} \leftharpoonup_{2} u_{1}),)tex"},
      {"CZ", "CZ44", 1, R"tex((u_{1}\rightharpoonup_{1} x_{1})\cdot x_{0} = u_{1}\rightharpoonup_{1} (x_{1}\cdot x_{0}+x_{0}\cdot x_{1}),)tex"},
      {"CZ", "CZ45", 1, R"tex(\omega_{1}(u_{1}, v_{1})\cdot x_{0} + (u_{1} \ast_{1} v_{1})\rightharpoonup_{3} x_{0}=u_{1}\rightharpoonup_{1} (v_{1}\rightharpoonup_{3} x_{0}+x_{0} \leftharpoonup_{2} v_{1}),)tex"},
      {"CZ", "CZ46", 1, R"tex((x_{1}\cdot y_{1}) \leftharpoonup_{3} u_{0}=x_{1}\cdot (y_{1} \leftharpoonup_{3} u_{0}+u_{0}\rightharpoonup_{2} y_{1}),)tex"},
      {"CZ", "CZ47", 1, R"tex((x_{1} \leftharpoonup_{1} u_{1}) \leftharpoonup_{3} u_{0}=x_{1}\cdot (\omega_{3}(u_{1}, u_{0})+\omega_{2}(u_{0}, u_{1}))+ x_{1} \leftharpoonup_{1} (u_{1} \ast_{3} u_{0}+u_{0} \ast_{2} u_{1}),)tex"},
      {"CZ", "CZ48", 1, R"tex((u_{1}\rightharpoonup_{1} x_{1}) \leftharpoonup_{3} u_{0} = u_{1}\rightharpoonup_{1} (x_{1} \leftharpoonup_{3} u_{0}+u_{0}\rightharpoonup_{2} x_{1}),)tex"},
      {"CZ", "CZ49", 1, R"tex(\omega_{1}(u_{1}, v_{1}) \leftharpoonup_{3} u_{0}+ \omega_{3}(u_{1} \ast_{1} v_{1}, u_{0})=u_{1}\rightharpoonup_{1} (\omega_{3}(v_{1}, u_{0})+\omega_{2}(u_{0}, v_{1})) + \omega_{1}(u_{1},v_{1} \ast_{3} u_{0}+ u_{0} \ast_{2} v_{1}),)tex"},
      {"CZ", "CZ50", 1, R"tex(\varphi(x_{0} \leftharpoonup_{2} u_{1})=x_{0}\cdot \sigma(u_{1}) + x_{0} \leftharpoonup_{0} d(u_{1}),)tex"},
      {"CZ", "CZ51", 1, R"tex(\varphi(u_{0}\rightharpoonup_{2} x_{1})=u_{0}\rightharpoonup_{0} \varphi(x_{1}),)tex"},
      {"CZ", "CZ52", 1, R"tex(\varphi\omega_{2}(u_{0}, u_{1}) + \sigma(u_{0} \ast_{2} u_{1})=u_{0}\rightharpoonup_{0} \sigma(u_{1}) + \omega_{0}(u_{0}, d(u_{1})),)tex"},
      {"CZ", "CZ53", 1, R"tex(\varphi(x_{1} \leftharpoonup_{3} u_{0})=\varphi(x_{1})\leftharpoonup_{0} u_{0},)tex"},
      {"CZ", "CZ54", 1, R"tex(\varphi(u_{1}\rightharpoonup_{3} x_{0})=\sigma(u_{1})\cdot x_{0}+ d(u_{1})\rightharpoonup_{0} x_{0},)tex"},
      {"CZ", "CZ55", 1, R"tex(\varphi\omega_{3}(u_{1}, u_{0}) + \sigma(u_{1} \ast_{3} u_{0})=\sigma(u_{1}) \leftharpoonup_{0} u_{0}+ \omega_{0}(d(u_{1}), u_{0}),)tex"},
      {"CZ", "CZ56", 1, R"tex(\sigma(u_{1})\cdot x_{1}+ d(u_{1})\rightharpoonup_{2} x_{1}=u_{1}\rightharpoonup_{1} x_{1},)tex"},
      {"CZ", "CZ57", 1, R"tex(\varphi(x_{1})\leftharpoonup_{2} u_{1}=x_{1} \leftharpoonup_{1} u_{1},)tex"},
      {"CZ", "CZ58", 1, R"tex(\sigma(u_{1}) \leftharpoonup_{2} v_{1} + \omega_{2}(d(u_{1}), v_{1})=\omega_{1}(u_{1}, v_{1}),)tex"},
      {"CZ", "CZ59", 1, R"tex(x_{1}\cdot \sigma(u_{1})+x_{1} \leftharpoonup_{3} d(u_{1})=x_{1} \leftharpoonup_{1} u_{1},)tex"},
      {"CZ", "CZ60", 1, R"tex(u_{1}\rightharpoonup_{3} \varphi(x_{1})=u_{1}\rightharpoonup_{1} x_{1},)tex"},
      {"CZ", "CZ61", 1, R"tex(u_{1}\rightharpoonup_{3}\sigma(v_{1}) + \omega_{3}(u_{1}, d(v_{1}))=\omega_{1}(u_{1}, v_{1}).)tex"},
      {"BZ", "BZ1", 1, R"tex(( x_{i}\cdot y_{i} )\triangleright_{i} w_{i}=x_{i}\triangleright_{i}( y_{i}\triangleright_{i} w_{i}+w_{i}\triangleleft_{i} y_{i}),)tex"},
      {"BZ", "BZ1", 2, R"tex((x_{i}\triangleright_{i} v_{i})\triangleleft_{i} z_{i}=x_{i}\triangleright_{i}(v_{i}\triangleleft_{i} z_{i}+ z_{i}\triangleright_{i} v_{i}),)tex"},
      {"BZ", "BZ1", 3, R"tex((u_{i}\triangleleft_{i} y_{i})\triangleleft_{i} z_{i}=u_{i}\triangleleft_{i} (y_{i}\cdot z_{i}+ z_{i}\cdot y_{i}),)tex"},
      {"BZ", "BZ2", 1, R"tex((x_{i}\leftharpoonup_{i} v_{i})\cdot y_{i}+(x_{i} \triangleright_{i} v_{i})\rightharpoonup_{i} y_{i} =x_{i}\cdot (v_{i} \rightharpoonup_{i} y_{i}+y_{i} \leftharpoonup_{i} v_{i})+x_{i}\leftharpoonup_{i}( v_{i}\triangleleft_{i} y_{i} + y_{i} \triangleright_{i} v_{i}),)tex"},
      {"BZ", "BZ3", 1, R"tex((u_{i} \rightharpoonup_{i} x_{i})\cdot y_{i} +( u_{i}\triangleleft_{i} x_{i} )\rightharpoonup_{i} y_{i} = u_{i}\rightharpoonup_{i}( x_{i} \cdot y_{i} + y_{i}\cdot x_{i} ),)tex"},
      {"BZ", "BZ4", 1, R"tex((u_{i} \ast_{i} v_{i} )\rightharpoonup_{i} x_{i} = u_{i}\rightharpoonup_{i}( v_{i}\rightharpoonup_{i} x_{i} + x_{i} \leftharpoonup_{i} v_{i}),)tex"},
      {"BZ", "BZ5", 1, R"tex((u_{i} \ast_{i} v_{i})\triangleleft_{i} x_{i} = u_{i}\triangleleft_{i}( v_{i}\rightharpoonup_{i} x_{i}+x_{i}\leftharpoonup_{i} v_{i})+u_{i} \ast_{i}( v_{i}\triangleleft_{i} x_{i} + x_{i} \triangleright_{i} v_{i} ),)tex"},
      {"BZ", "BZ6", 1, R"tex(( x_{i}\cdot y_{i} )\leftharpoonup_{i} w_{i} = x_{i}\cdot(y_{i} \leftharpoonup_{i} w_{i}+w_{i}\rightharpoonup_{i} y_{i})+x_{i}\leftharpoonup_{i}(y_{i} \triangleright_{i} w_{i}+w_{i}\triangleleft_{i} y_{i}),)tex"},
      {"BZ", "BZ7", 1, R"tex(( x_{i} \leftharpoonup_{i} v_{i})\leftharpoonup_{i} w_{i} =x_{i}\leftharpoonup_{i}(v_{i} \ast_{i} w_{i} +w_{i} \ast_{i} v_{i} ),)tex"},
      {"BZ", "BZ8", 1, R"tex((x_{i} \leftharpoonup_{i} v_{i}) \triangleright_{i} w_{i}+(x_{i}\triangleright_{i} v_{i})\ast_{i} w_{i} = x_{i}\triangleright_{i}( v_{i} \ast_{i} w_{i}+w_{i} \ast_{i} v_{i} ),)tex"},
      {"BZ", "BZ9", 1, R"tex(( u_{i}\rightharpoonup_{i} x_{i})\leftharpoonup_{i} w_{i} = u_{i}\rightharpoonup_{i}( x_{i} \leftharpoonup_{i} w_{i}+w_{i}\rightharpoonup_{i} x_{i} ),)tex"},
      {"BZ", "BZ10", 1, R"tex((u_{i}\rightharpoonup_{i} x_{i}) \triangleright_{i} w_{i}+ (u_{i}\triangleleft_{i} x_{i})\ast_{i} w_{i} = u_{i}\triangleleft_{i}(x_{i} \leftharpoonup_{i} w_{i} + w_{i}\rightharpoonup_{i} x_{i} )+u_{i} \ast_{i}(x_{i} \triangleright_{i} w_{i} + w_{i}\triangleleft_{i} x_{i}),)tex"},
      {"BZ", "BZ11", 1, R"tex((x_{0}\cdot x_{1}) \leftharpoonup_{1} u_{1}=x_{0}\cdot (x_{1} \leftharpoonup_{1}u_{1}+u_{1}\rightharpoonup_{1} x_{1})+ x_{0} \leftharpoonup_{2} (x_{1} \triangleright_{1} u_{1}+u_{1}\triangleleft_{1} x_{1}),)tex"},
      {"BZ", "BZ12", 1, R"tex((x_{0} \leftharpoonup_{2} u_{1})\cdot x_{1} + ( x_{0} \triangleright_{2}u_{1})\rightharpoonup_{1}x_{1}=x_{0}\cdot (u_{1}\rightharpoonup_{1}x_{1}+x_{1} \leftharpoonup_{1}u_{1})+ x_{0}\leftharpoonup_{2}(u_{1}\triangleleft_{1} x_{1}+x_{1} \triangleright_{1} u_{1}),)tex"},
      {"BZ", "BZ13", 1, R"tex((x_{0} \leftharpoonup_{2} u_{1}) \leftharpoonup_{1} v_{1} =x_{0} \leftharpoonup_{2} (u_{1} \ast_{1} v_{1}+v_{1} \ast_{1} u_{1}),)tex"},
      {"BZ", "BZ14", 1, R"tex((u_{0}\rightharpoonup_{2} x_{1})\cdot y_{1} + (u_{0}\triangleleft_{2} x_{1})\rightharpoonup_{1} y_{1}=u_{0}\rightharpoonup_{2} ( x_{1}\cdot y_{1}+y_{1}\cdot x_{1}),)tex"},
      {"BZ", "BZ15", 1, R"tex((u_{0}\rightharpoonup_{2} x_{1}) \leftharpoonup_{1}u_{1}=u_{0}\rightharpoonup_{2} (x_{1} \leftharpoonup_{1}u_{1}+u_{1}\rightharpoonup_{1} x_{1}),)tex"},
      {"BZ", "BZ16", 1, R"tex((u_{0} \ast_{2} u_{1})\rightharpoonup_{1} x_{1}=u_{0}\rightharpoonup_{2} (u_{1}\rightharpoonup_{1} x_{1}+x_{1} \leftharpoonup_{1} u_{1}),)tex"},
      {"BZ", "BZ17", 1, R"tex((x_{0}\cdot x_{1}) \triangleright_{1} u_{1}=x_{0} \triangleright_{2} (x_{1} \triangleright_{1} u_{1}+u_{1}\triangleleft_{1} x_{1}),)tex"},
      {"BZ", "BZ18", 1, R"tex(( x_{0} \triangleright_{2} u_{1})\triangleleft_{1} y_{1} =x_{0} \triangleright_{2} (u_{1}\triangleleft_{1} y_{1}+y_{1} \triangleright_{1} u_{1}),)tex"},
      {"BZ", "BZ19", 1, R"tex((x_{0} \leftharpoonup_{2} u_{1}) \triangleright_{1} v_{1}+( x_{0} \triangleright_{2} u_{1}) \ast_{1} v_{1}=x_{0} \triangleright_{2} (u_{1} \ast_{1} v_{1}+v_{1} \ast_{1} u_{1}),)tex"},
      {"BZ", "BZ20", 1, R"tex((u_{0}\triangleleft_{2} x_{1})\triangleleft_{1} y_{1}=u_{0}\triangleleft_{2} (x_{1}\cdot y_{1}+y_{1}\cdot x_{1}),)tex"},
      {"BZ", "BZ21", 1, R"tex((u_{0}\rightharpoonup_{2} x_{1}) \triangleright_{1} u_{1} + (u_{0}\triangleleft_{2} x_{1}) \ast_{1} u_{1}=u_{0}\triangleleft_{2} (x_{1} \leftharpoonup_{1} u_{1}+u_{1}\rightharpoonup_{1} x_{1}) + u_{0} \ast_{2} (x_{1} \triangleright_{1} u_{1}+u_{1}\triangleleft_{1} x_{1}),)tex"},
      {"BZ", "BZ22", 1, R"tex((u_{0} \ast_{2} u_{1})\triangleleft_{1} x_{1}=u_{0}\triangleleft_{2} (u_{1}\rightharpoonup_{1} x_{1}+x_{1} \leftharpoonup_{1} u_{1}) + u_{0} \ast_{2} (u_{1}\triangleleft_{1} x_{1}+x_{1} \triangleright_{1} u_{1}),)tex"},
      {"BZ", "BZ23", 1, R"tex((x_{0} \leftharpoonup_{0} u_{0})\cdot x_{1}+ (x_{0} \triangleright_{0} u_{0})\rightharpoonup_{2} x_{1}=x_{0}\cdot (u_{0}\rightharpoonup_{2} x_{1}+x_{1} \leftharpoonup_{3} u_{0})+ x_{0} \leftharpoonup_{2} (u_{0}\triangleleft_{2} x_{1}+x_{1} \triangleright_{3} u_{0}),)tex"},
      {"BZ", "BZ24", 1, R"tex((u_{0}\rightharpoonup_{0} x_{0})\cdot x_{1}+ (u_{0}\triangleleft_{0} x_{0})\rightharpoonup_{2} x_{1}=u_{0}\rightharpoonup_{2} (x_{0}\cdot x_{1}+x_{1}\cdot x_{0}),)tex"},
      {"BZ", "BZ25", 1, R"tex((u_{0} \ast_{0} v_{0})\rightharpoonup_{2} x_{1}= u_{0}\rightharpoonup_{2} (v_{0}\rightharpoonup_{2} x_{1}+x_{1} \leftharpoonup_{3} v_{0}),)tex"},
      {"BZ", "BZ26", 1, R"tex((x_{0}\cdot y_{0}) \leftharpoonup_{2} u_{1}=x_{0}\cdot (y_{0} \leftharpoonup_{2} u_{1}+u_{1}\rightharpoonup_{3} y_{0})+x_{0} \leftharpoonup_{2} (y_{0} \triangleright_{2} u_{1}+u_{1}\triangleleft_{3} y_{0}),)tex"},
      {"BZ", "BZ27", 1, R"tex((x_{0} \leftharpoonup_{0} u_{0}) \leftharpoonup_{2} u_{1}=x_{0} \leftharpoonup_{2} (u_{0} \ast_{2} u_{1}+u_{1} \ast_{3} u_{0}),)tex"},
      {"BZ", "BZ28", 1, R"tex((u_{0}\rightharpoonup_{0} x_{0}) \leftharpoonup_{2} u_{1}= u_{0}\rightharpoonup_{2} (x_{0} \leftharpoonup_{2} u_{1}+u_{1}\rightharpoonup_{3} x_{0}),)tex"},
      {"BZ", "BZ29", 1, R"tex((x_{0}\cdot y_{0}) \triangleright_{2} u_{1}=x_{0} \triangleright_{2} (y_{0} \triangleright_{2} u_{1}+u_{1}\triangleleft_{3} y_{0}),)tex"},
      {"BZ", "BZ30", 1, R"tex((x_{0} \leftharpoonup_{0} u_{0}) \triangleright_{2} u_{1} + (x_{0} \triangleright_{0} u_{0}) \ast_{2} u_{1}=x_{0} \triangleright_{2} (u_{0} \ast_{2} u_{1}+u_{1} \ast_{3} u_{0}),)tex"},
      {"BZ", "BZ31", 1, R"tex((u_{0}\rightharpoonup_{0} x_{0}) \triangleright_{2} u_{1}+ (u_{0}\triangleleft_{0} x_{0}) \ast_{2} u_{1}=u_{0}\triangleleft_{2} (x_{0} \leftharpoonup_{2} u_{1}+u_{1}\rightharpoonup_{3} x_{0})+ u_{0} \ast_{2} (x_{0} \triangleright_{2} u_{1}+u_{1}\triangleleft_{3} x_{0}),)tex"},
      {"BZ", "BZ32", 1, R"tex((x_{0} \triangleright_{0} u_{0})\triangleleft_{2} x_{1}=x_{0} \triangleright_{2} (u_{0}\triangleleft_{2} x_{1}+ x_{1} \triangleright_{3} u_{0}),)tex"},
      {"BZ", "BZ33", 1, R"tex((u_{0}\triangleleft_{0} x_{0})\triangleleft_{2} x_{1}=u_{0}\triangleleft_{2} (x_{0}\cdot x_{1}+x_{1}\cdot x_{0}),)tex"},
      {"BZ", "BZ34", 1, R"tex((u_{0} \ast_{0} v_{0})\triangleleft_{2} x_{1}=u_{0}\triangleleft_{2} (v_{0}\rightharpoonup_{2} x_{1}+x_{1} \leftharpoonup_{3} v_{0})+ u_{0} \ast_{2} (v_{0}\triangleleft_{2} x_{1}+x_{1} \triangleright_{3} v_{0}),)tex"},
      {"BZ", "BZ35", 1, R"tex((x_{1} \leftharpoonup_{3} u_{0})\cdot x_{0}+ (x_{1} \triangleright_{3} u_{0})\rightharpoonup_{3} x_{0}=x_{1}\cdot (u_{0}\rightharpoonup_{0} x_{0}+x_{0} \leftharpoonup_{0} u_{0}) + x_{1} \leftharpoonup_{3} (u_{0}\triangleleft_{0} x_{0}+x_{0} \triangleright_{0} u_{0}),)tex"},
      {"BZ", "BZ36", 1, R"tex((u_{1}\rightharpoonup_{3} x_{0})\cdot y_{0} + (u_{1}\triangleleft_{3} x_{0})\rightharpoonup_{3} y_{0}=u_{1}\rightharpoonup_{3} (x_{0}\cdot y_{0}+y_{0}\cdot x_{0}),)tex"},
      {"BZ", "BZ37", 1, R"tex((u_{1} \ast_{3} u_{0})\rightharpoonup_{3} x_{0}=u_{1}\rightharpoonup_{3} (u_{0}\rightharpoonup_{0} x_{0}+x_{0} \leftharpoonup_{0} u_{0}),)tex"},
      {"BZ", "BZ38", 1, R"tex((x_{1}\cdot x_{0}) \leftharpoonup_{3} u_{0}=x_{1}\cdot (x_{0} \leftharpoonup_{0} u_{0}+u_{0}\rightharpoonup_{0} x_{0}) + x_{1} \leftharpoonup_{3} (x_{0} \triangleright_{0} u_{0}+u_{0}\triangleleft_{0} x_{0}),)tex"},
      {"BZ", "BZ39", 1, R"tex((x_{1} \leftharpoonup_{3} u_{0}) \leftharpoonup_{3} v_{0}=x_{1} \leftharpoonup_{3} (u_{0} \ast_{0} v_{0}+v_{0} \ast_{0} u_{0}),)tex"},
      {"BZ", "BZ40", 1, R"tex((u_{1}\rightharpoonup_{3} x_{0}) \leftharpoonup_{3} u_{0} =u_{1}\rightharpoonup_{3} (x_{0} \leftharpoonup_{0} u_{0}+u_{0}\rightharpoonup_{0} x_{0}),)tex"},
      {"BZ", "BZ41", 1, R"tex((x_{1}\cdot x_{0}) \triangleright_{3} u_{0}=x_{1} \triangleright_{3} (x_{0} \triangleright_{0} u_{0}+u_{0}\triangleleft_{0} x_{0}),)tex"},
      {"BZ", "BZ42", 1, R"tex((x_{1} \leftharpoonup_{3} u_{0}) \triangleright_{3} v_{0}+ (x_{1} \triangleright_{3} u_{0}) \ast_{3} v_{0}=x_{1} \triangleright_{3} (u_{0} \ast_{0} v_{0}+v_{0} \ast_{0} u_{0}),)tex"},
      {"BZ", "BZ43", 1, R"tex((u_{1}\rightharpoonup_{3} x_{0}) \triangleright_{3} u_{0}+ (u_{1}\triangleleft_{3} x_{0}) \ast_{3} u_{0}=u_{1}\triangleleft_{3} (x_{0} \leftharpoonup_{0} u_{0}+u_{0}\rightharpoonup_{0} x_{0})+ u_{1} \ast_{3} (x_{0} \triangleright_{0} u_{0}+u_{0}\triangleleft_{0} x_{0}),)tex"},
      {"BZ", "BZ44", 1, R"tex((x_{1} \triangleright_{3} u_{0})\triangleleft_{3} x_{0}=x_{1} \triangleright_{3} (u_{0}\triangleleft_{0} x_{0}+x_{0} \triangleright_{0} u_{0}),)tex"},
      {"BZ", "BZ45", 1, R"tex((u_{1}\triangleleft_{3} x_{0})\triangleleft_{3} y_{0}=u_{1}\triangleleft_{3} (x_{0}\cdot y_{0}+y_{0}\cdot x_{0}),)tex"},
      {"BZ", "BZ46", 1, R"tex((u_{1} \ast_{3} u_{0})\triangleleft_{3} x_{0}=u_{1}\triangleleft_{3} (u_{0}\rightharpoonup_{0} x_{0}+x_{0} \leftharpoonup_{0} u_{0})+ u_{1} \ast_{3} (u_{0}\triangleleft_{0} x_{0}+x_{0} \triangleright_{0} u_{0}),)tex"},
      {"BZ", "BZ47", 1, R"tex((x_{0} \leftharpoonup_{2} u_{1})\cdot y_{0}+ (x_{0} \triangleright_{2} u_{1})\rightharpoonup_{3} y_{0}=x_{0}\cdot (u_{1}\rightharpoonup_{3} y_{0}+y_{0} \leftharpoonup_{2} u_{1})+ x_{0} \leftharpoonup_{2} (u_{1}\triangleleft_{3} y_{0}+y_{0} \triangleright_{2} u_{1}),)tex"},
      {"BZ", "BZ48", 1, R"tex((u_{0}\rightharpoonup_{2} x_{1})\cdot y_{0}+ (u_{0}\triangleleft_{2} x_{1})\rightharpoonup_{3} y_{0}= u_{0}\rightharpoonup_{2} (x_{1}\cdot y_{0}+y_{0}\cdot x_{1}),)tex"},
      {"BZ", "BZ49", 1, R"tex((u_{0} \ast_{2} u_{1})\rightharpoonup_{3} x_{0}= u_{0}\rightharpoonup_{2} (u_{1}\rightharpoonup_{3} x_{0}+x_{0} \leftharpoonup_{2} u_{1}),)tex"},
      {"BZ", "BZ50", 1, R"tex((x_{0}\cdot x_{1}) \leftharpoonup_{3} u_{0}=x_{0}\cdot (x_{1} \leftharpoonup_{3} u_{0}+u_{0}\rightharpoonup_{2} x_{1})+ x_{0} \leftharpoonup_{2} (x_{1} \triangleright_{3} u_{0}+u_{0}\triangleleft_{2} x_{1}),)tex"},
      {"BZ", "BZ51", 1, R"tex((x_{0} \leftharpoonup_{2} u_{1}) \leftharpoonup_{3} v_{0}=x_{0} \leftharpoonup_{2} (u_{1} \ast_{3} v_{0}+v_{0} \ast_{2} u_{1}),)tex"},
      {"BZ", "BZ52", 1, R"tex((u_{0}\rightharpoonup_{2} x_{1}) \leftharpoonup_{3} v_{0}= u_{0}\rightharpoonup_{2} (x_{1} \leftharpoonup_{3} v_{0}+v_{0}\rightharpoonup_{2} x_{1}) ,)tex"},
      {"BZ", "BZ53", 1, R"tex((x_{0}\cdot x_{1}) \triangleright_{3} u_{0}=x_{0} \triangleright_{2} (x_{1} \triangleright_{3} u_{0}+u_{0}\triangleleft_{2} x_{1}),)tex"},
      {"BZ", "BZ54", 1, R"tex((x_{0} \leftharpoonup_{2} u_{1}) \triangleright_{3} v_{0}+ (x_{0} \triangleright_{2} u_{1}) \ast_{3} v_{0}=x_{0} \triangleright_{2} (u_{1} \ast_{3} v_{0}+v_{0} \ast_{2} u_{1}),)tex"},
      {"BZ", "BZ55", 1, R"tex((u_{0}\rightharpoonup_{2} x_{1}) \triangleright_{3} v_{0}+ (u_{0}\triangleleft_{2} x_{1}) \ast_{3} v_{0}=u_{0}\triangleleft_{2} (x_{1} \leftharpoonup_{3} v_{0}+v_{0}\rightharpoonup_{2} x_{1})+ u_{0} \ast_{2} (x_{1} \triangleright_{3} v_{0}+v_{0}\triangleleft_{2} x_{1}),)tex"},
      {"BZ", "BZ56", 1, R"tex((x_{0} \triangleright_{2} u_{1})\triangleleft_{3} y_{0}=x_{0} \triangleright_{2} (u_{1}\triangleleft_{3} y_{0}+y_{0} \triangleright_{2} u_{1}),)tex"},
      {"BZ", "BZ57", 1, R"tex((u_{0}\triangleleft_{2} x_{1})\triangleleft_{3} y_{0}=u_{0}\triangleleft_{2} (x_{1}\cdot y_{0}+y_{0}\cdot x_{1}),)tex"},
      {"BZ", "BZ58", 1, R"tex((u_{0} \ast_{2} u_{1})\triangleleft_{3} y_{0}=u_{0}\triangleleft_{2} (u_{1}\rightharpoonup_{3} y_{0}+y_{0} \leftharpoonup_{2} u_{1})+ u_{0} \ast_{2} (u_{1}\triangleleft_{3} y_{0}+y_{0} \triangleright_{2} u_{1}),)tex"},
      {"BZ", "BZ59", 1, R"tex((x_{1} \leftharpoonup_{3} u_{0})\cdot y_{1}+ (x_{1} \triangleright_{3} u_{0})\rightharpoonup_{1} y_{1}=x_{1}\cdot (u_{0}\rightharpoonup_{2} y_{1}+y_{1} \leftharpoonup_{3} u_{0})+ x_{1} \leftharpoonup_{1} (u_{0}\triangleleft_{2} y_{1}+y_{1} \triangleright_{3} u_{0}),)tex"},
      {"BZ", "BZ60", 1, R"tex((u_{1}\rightharpoonup_{3} x_{0})\cdot x_{1} + (u_{1}\triangleleft_{3} x_{0})\rightharpoonup_{1} x_{1}=u_{1}\rightharpoonup_{1} (x_{0}\cdot x_{1}+x_{1}\cdot x_{0}),)tex"},
      {"BZ", "BZ61", 1, R"tex((u_{1} \ast_{3} u_{0})\rightharpoonup_{1} x_{1}=u_{1}\rightharpoonup_{1} (u_{0}\rightharpoonup_{2} x_{1}+x_{1} \leftharpoonup_{3} u_{0}),)tex"},
      {"BZ", "BZ62", 1, R"tex((x_{1}\cdot x_{0}) \leftharpoonup_{1} u_{1}=x_{1}\cdot (x_{0} \leftharpoonup_{2} u_{1}+u_{1}\rightharpoonup_{3} x_{0})+x_{1} \leftharpoonup_{1} (x_{0} \triangleright_{2} u_{1}+u_{1}\triangleleft_{3} x_{0}),)tex"},
      {"BZ", "BZ63", 1, R"tex((x_{1} \leftharpoonup_{3} u_{0}) \leftharpoonup_{1} u_{1}=x_{1} \leftharpoonup_{1} (u_{0} \ast_{2} u_{1}+u_{1} \ast_{3} u_{0}) ,)tex"},
      {"BZ", "BZ64", 1, R"tex((u_{1}\rightharpoonup_{3} x_{0}) \leftharpoonup_{1} v_{1} =u_{1}\rightharpoonup_{1} (x_{0} \leftharpoonup_{2} v_{1}+v_{1}\rightharpoonup_{3} x_{0}),)tex"},
      {"BZ", "BZ65", 1, R"tex((x_{1}\cdot x_{0}) \triangleright_{1} u_{1}=x_{1} \triangleright_{1} (x_{0} \triangleright_{2} u_{1}+u_{1}\triangleleft_{3} x_{0}),)tex"},
      {"BZ", "BZ66", 1, R"tex((x_{1} \leftharpoonup_{3} u_{0}) \triangleright_{1} u_{1}+ (x_{1} \triangleright_{3} u_{0}) \ast_{1} u_{1}=x_{1} \triangleright_{1} (u_{0} \ast_{2} u_{1}+u_{1} \ast_{3} u_{0}),)tex"},
      {"BZ", "BZ67", 1, R"tex((u_{1}\rightharpoonup_{3} x_{0}) \triangleright_{1} v_{1} + (u_{1}\triangleleft_{3} x_{0}) \ast_{1} v_{1}=u_{1}\triangleleft_{1} (x_{0} \leftharpoonup_{2} v_{1}+v_{1}\rightharpoonup_{3} x_{0})+ u_{1} \ast_{1} (x_{0} \triangleright_{2} v_{1}+v_{1}\triangleleft_{3} x_{0}),)tex"},
      {"BZ", "BZ68", 1, R"tex((x_{1} \triangleright_{3} u_{0})\triangleleft_{1} y_{1}=x_{1} \triangleright_{1} (u_{0}\triangleleft_{2} y_{1}+y_{1} \triangleright_{3} u_{0}),)tex"},
      {"BZ", "BZ69", 1, R"tex((u_{1}\triangleleft_{3} x_{0})\triangleleft_{1} x_{1}=u_{1}\triangleleft_{1} (x_{0}\cdot x_{1}+x_{1}\cdot x_{0}),)tex"},
      {"BZ", "BZ70", 1, R"tex((u_{1} \ast_{3} u_{0})\triangleleft_{1} x_{1}=u_{1}\triangleleft_{1} (u_{0}\rightharpoonup_{2} x_{1}+x_{1} \leftharpoonup_{3} u_{0})+ u_{1} \ast_{1} (u_{0}\triangleleft_{2} x_{1}+x_{1} \triangleright_{3} u_{0}) ,)tex"},
      {"BZ", "BZ71", 1, R"tex((x_{1} \leftharpoonup_{1} u_{1})\cdot x_{0}+ (x_{1} \triangleright_{1} u_{1})\rightharpoonup_{3} x_{0}=x_{1}\cdot (u_{1}\rightharpoonup_{3} x_{0}+x_{0} \leftharpoonup_{2} u_{1})+ x_{1} \leftharpoonup_{1} (u_{1}\triangleleft_{3} x_{0}+x_{0} \triangleright_{2} u_{1}),)tex"},
      {"BZ", "BZ72", 1, R"tex((u_{1}\rightharpoonup_{1} x_{1})\cdot x_{0} + (u_{1}\triangleleft_{1} x_{1})\rightharpoonup_{3} x_{0}= u_{1}\rightharpoonup_{1} (x_{1}\cdot x_{0}+x_{0}\cdot x_{1}),)tex"},
      {"BZ", "BZ73", 1, R"tex((u_{1} \ast_{1} v_{1})\rightharpoonup_{3} x_{0}=u_{1}\rightharpoonup_{1} (v_{1}\rightharpoonup_{3} x_{0}+x_{0} \leftharpoonup_{2} v_{1}),)tex"},
      {"BZ", "BZ74", 1, R"tex((x_{1}\cdot y_{1}) \leftharpoonup_{3} u_{0}=x_{1}\cdot (y_{1} \leftharpoonup_{3} u_{0}+u_{0}\rightharpoonup_{2} y_{1})+ x_{1} \leftharpoonup_{1} (y_{1} \triangleright_{3} u_{0}+u_{0}\triangleleft_{2} y_{1}),)tex"},
      {"BZ", "BZ75", 1, R"tex((x_{1} \leftharpoonup_{1} u_{1}) \leftharpoonup_{3} u_{0}=x_{1} \leftharpoonup_{1} (u_{1} \ast_{3} u_{0}+u_{0} \ast_{2} u_{1}),)tex"},
      {"BZ", "BZ76", 1, R"tex((u_{1}\rightharpoonup_{1} x_{1}) \leftharpoonup_{3} u_{0} = u_{1}\rightharpoonup_{1} (x_{1} \leftharpoonup_{3} u_{0}+u_{0}\rightharpoonup_{2} x_{1}) ,)tex"},
      {"BZ", "BZ77", 1, R"tex((x_{1}\cdot y_{1}) \triangleright_{3} u_{0}=x_{1} \triangleright_{1} (y_{1} \triangleright_{3} u_{0}+u_{0}\triangleleft_{2} y_{1}),)tex"},
      {"BZ", "BZ78", 1, R"tex((x_{1} \leftharpoonup_{1} u_{1}) \triangleright_{3} u_{0}+ (x_{1} \triangleright_{1} u_{1}) \ast_{3} u_{0}=x_{1} \triangleright_{1} (u_{1} \ast_{3} u_{0}+u_{0} \ast_{2} u_{1}),)tex"},
      {"BZ", "BZ79", 1, R"tex((u_{1}\rightharpoonup_{1} x_{1}) \triangleright_{3} u_{0} + (u_{1}\triangleleft_{1} x_{1}) \ast_{3} u_{0}=u_{1}\triangleleft_{1} (x_{1} \leftharpoonup_{3} u_{0}+u_{0}\rightharpoonup_{2} x_{1})+ u_{1} \ast_{1} (x_{1} \triangleright_{3} u_{0}+u_{0}\triangleleft_{2} x_{1}),)tex"},
      {"BZ", "BZ80", 1, R"tex((x_{1} \triangleright_{1} u_{1})\triangleleft_{3} x_{0}=x_{1} \triangleright_{1} (u_{1}\triangleleft_{3} x_{0}+x_{0} \triangleright_{2} u_{1}),)tex"},
      {"BZ", "BZ81", 1, R"tex((u_{1}\triangleleft_{1} x_{1})\triangleleft_{3} x_{0}=u_{1}\triangleleft_{1} (x_{1}\cdot x_{0}+x_{0}\cdot x_{1}),)tex"},
      {"BZ", "BZ82", 1, R"tex((u_{1} \ast_{1} v_{1})\triangleleft_{3} x_{0}=u_{1}\triangleleft_{1} (v_{1}\rightharpoonup_{3} x_{0}+x_{0} \leftharpoonup_{2} v_{1})+ u_{1} \ast_{1} (v_{1}\triangleleft_{3} x_{0}+x_{0} \triangleright_{2} v_{1}),)tex"},
      {"BZ", "BZ83", 1, R"tex(\varphi(x_{0} \leftharpoonup_{2} u_{1})+\sigma(x_{0} \triangleright_{2} u_{1})=x_{0}\cdot \sigma(u_{1}) + x_{0} \leftharpoonup_{0} d(u_{1}),)tex"},
      {"BZ", "BZ84", 1, R"tex(\varphi(u_{0}\rightharpoonup_{2} x_{1})+ \sigma(u_{0}\triangleleft_{2} x_{1})=u_{0}\rightharpoonup_{0} \varphi(x_{1}),)tex"},
      {"BZ", "BZ85", 1, R"tex(\sigma(u_{0} \ast_{2} u_{1})=u_{0}\rightharpoonup_{0} \sigma(u_{1}) ,)tex"},
      {"BZ", "BZ86", 1, R"tex(d(x_{0} \triangleright_{2} u_{1})=x_{0} \triangleright_{0} d(u_{1}),)tex"},
      {"BZ", "BZ87", 1, R"tex(d(u_{0}\triangleleft_{2} x_{1})= u_{0}\triangleleft_{0} \varphi(x_{1}),)tex"},
      {"BZ", "BZ88", 1, R"tex(d(u_{0} \ast_{2} u_{1})= u_{0}\triangleleft_{0}\sigma(u_{1}) + u_{0} \ast_{0} d(u_{1}),)tex"},
      {"BZ", "BZ89", 1, R"tex(\varphi(x_{1} \leftharpoonup_{3} u_{0})+\sigma(x_{1} \triangleright_{3} u_{0})=\varphi(x_{1})\leftharpoonup_{0} u_{0},)tex"},
      {"BZ", "BZ90", 1, R"tex(\varphi(u_{1}\rightharpoonup_{3} x_{0}) + \sigma(u_{1}\triangleleft_{3} x_{0})=\sigma(u_{1})\cdot x_{0}+ d(u_{1})\rightharpoonup_{0} x_{0},)tex"},
      {"BZ", "BZ91", 1, R"tex(\sigma(u_{1} \ast_{3} u_{0})=\sigma(u_{1}) \leftharpoonup_{0} u_{0},)tex"},
      {"BZ", "BZ92", 1, R"tex(d(x_{1} \triangleright_{3} u_{0})=\varphi(x_{1})\triangleright_{0} u_{0},)tex"},
      {"BZ", "BZ93", 1, R"tex(d(u_{1}\triangleleft_{3} x_{0}) =d(u_{1})\triangleleft_{0} x_{0},)tex"},
      {"BZ", "BZ94", 1, R"tex(d(u_{1} \ast_{3} u_{0}))=\sigma(u_{1}) \triangleright_{0} u_{0} + d(u_{1}) \ast_{0} u_{0},)tex"},
      {"BZ", "BZ95", 1, R"tex(\sigma(u_{1})\cdot x_{1}+ d(u_{1})\rightharpoonup_{2} x_{1}=u_{1}\rightharpoonup_{1} x_{1},)tex"},
      {"BZ", "BZ96", 1, R"tex(\varphi(x_{1})\leftharpoonup_{2} u_{1}=x_{1} \leftharpoonup_{1} u_{1},)tex"},
      {"BZ", "BZ97", 1, R"tex(\sigma(u_{1}) \leftharpoonup_{2} v_{1}=0,)tex"},
      {"BZ", "BZ98", 1, R"tex(\varphi(x_{1})\triangleright_{2} u_{1}=x_{1} \triangleright_{1} u_{1},)tex"},
      {"BZ", "BZ99", 1, R"tex(\sigma(u_{1}) \triangleright_{2} v_{1} + d(u_{1}) \ast_{2} v_{1}=u_{1} \ast_{1} v_{1},)tex"},
      {"BZ", "BZ100", 1, R"tex(d(u_{1})\triangleleft_{2} x_{1} =u_{1}\triangleleft_{1} x_{1},)tex"},
      {"BZ", "BZ101", 1, R"tex(x_{1}\cdot \sigma(u_{1})+x_{1} \leftharpoonup_{3} d(u_{1})=x_{1} \leftharpoonup_{1} u_{1},)tex"},
      {"BZ", "BZ102", 1, R"tex(u_{1}\rightharpoonup_{3} \varphi(x_{1})=u_{1}\rightharpoonup_{1} x_{1},)tex"},
      {"BZ", "BZ103", 1, R"tex(u_{1}\rightharpoonup_{3}\sigma(v_{1}) = 0,)tex"},
      {"BZ", "BZ104", 1, R"tex(x_{1} \triangleright_{3} d(u_{1})=x_{1} \triangleright_{1} u_{1},)tex"},
      {"BZ", "BZ105", 1, R"tex(u_{1}\triangleleft_{3} \varphi(x_{1})=u_{1}\triangleleft_{1} x_{1},)tex"},
      {"BZ", "BZ106", 1, R"tex(u_{1}\triangleleft_{3}\sigma(v_{1}) + u_{1} \ast_{3} d(v_{1})=u_{1} \ast_{1} v_{1}.)tex"},
  };
  return rows;
}

}  // namespace zinbiel::detail
