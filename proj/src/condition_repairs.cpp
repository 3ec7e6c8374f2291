#include "condition_text.hpp"

namespace zinbiel::detail {

// Evaluated replacements for transcriptions that do not parse or typecheck,
// and for forms that disagree with direct verification.
const std::vector<RawRepair>& raw_repairs() {
  static const std::vector<RawRepair> rows = {
      {"Z26", 1, false,
       R"tex(\omega_{2}(u_{0}, u_{1}) \triangleright_{1} v_{1} + (u_{0} \ast_{2} u_{1}) \ast_{1} v_{1}=u_{0}\triangleleft_{2} (\omega_{1}(u_{1}, v_{1})+\omega_{1}(v_{1}, u_{1})) + u_{0} \ast_{2} (u_{1} \ast_{1} v_{1}+v_{1} \ast_{1} u_{1}))tex",
       R"txt(stray closing delimiter at the end of the equation)txt"},
      {"ZZ14", 1, false,
       R"tex((u_{0} \ast_{2} u_{1}) \ast_{1} v_{1}=u_{0} \ast_{2} (u_{1} \ast_{1} v_{1}+v_{1} \ast_{1} u_{1}))tex",
       R"txt(stray closing delimiter at the end of the equation)txt"},
      {"Z108", 1, false,
       R"tex(d(u_{1} \ast_{3} u_{0})=\sigma(u_{1}) \triangleright_{0} u_{0} + d(u_{1}) \ast_{0} u_{0},)tex",
       R"txt(unbalanced closing parenthesis on the left-hand side)txt"},
      {"ZZ38", 1, false,
       R"tex(d(u_{1} \ast_{3} u_{0})=\sigma(u_{1}) \triangleright_{0} u_{0} + d(u_{1}) \ast_{0} u_{0},)tex",
       R"txt(unbalanced closing parenthesis on the left-hand side)txt"},
      {"BZ94", 1, false,
       R"tex(d(u_{1} \ast_{3} u_{0})=\sigma(u_{1}) \triangleright_{0} u_{0} + d(u_{1}) \ast_{0} u_{0},)tex",
       R"txt(unbalanced closing parenthesis on the left-hand side)txt"},
      {"H6", 1, false,
       R"tex(s_{i}(u_{i} \ast_{i} v_{i})=r_{i}(u_{i}) \triangleright_{i}^{\prime} s_{i}(v_{i})+s_{i}(u_{i})\triangleleft_{i}^{\prime}r_{i}(v_{i})+ s_{i}(u_{i}) \ast_{i}^{\prime} s_{i}(v_{i}),)tex",
       R"txt(unbalanced closing parenthesis on the left-hand side)txt"},
      {"H14", 1, false,
       R"tex(s_{1}(u_{0} \ast_{2} u_{1})-r_{0}(u_{0}) \triangleright^{\prime}_{2} s_{1}(u_{1})-s_{0}(u_{0})\triangleleft^{\prime}_{2}r_{1}(u_{1}) -s_{0}(u_{0}) \ast^{\prime}_{2} s_{1}(u_{1})=0,)tex",
       R"txt(unbalanced closing parenthesis on the left-hand side)txt"},
      {"H20", 1, false,
       R"tex(s_{1}(u_{1} \ast_{3} u_{0})=r_{1}(u_{1}) \triangleright^{\prime}_{3} s_{0}(u_{0})+s_{1}(u_{1})\triangleleft^{\prime}_{3}r_{0}(u_{0}) + s_{1}(u_{1}) \ast^{\prime}_{3} s_{0}(u_{0}).)tex",
       R"txt(unbalanced closing parenthesis on the left-hand side)txt"},
      {"ZZ12", 1, true,
       R"tex(\omega_{0}(u_{0}, v_{0}) \triangleright_{0} w_{0}+(u_{0} \ast_{0} v_{0})\ast_{0} w_{0} =u_{0}\triangleleft_{0} \big(\omega_{0}(v_{0}, w_{0})+\omega_{0}(w_{0},v_{0})\big)+u_{0} \ast_{0}(v_{0} \ast_{0} w_{0}+w_{0} \ast_{0} v_{0}),)tex",
       R"txt(corrupted delimiter token read as \big; the statement then mirrors (Z12) at level 0)txt"},
      {"ZZ19", 1, true,
       R"tex((u_{1}\triangleleft_{3} x_{0}) \ast_{3} u_{0}=u_{1}\triangleleft_{3} (x_{0} \leftharpoonup_{0} u_{0}+u_{0}\rightharpoonup_{0} x_{0})+u_{1} \ast_{3} (x_{0} \triangleright_{0} u_{0}+u_{0}\triangleleft_{0} x_{0}),)tex",
       R"txt(restricting (Z50) to Z1 = 0 keeps the term u_1 ◁_3 (x_0 ↼_0 u_0 + u_0 ⇀_0 x_0), which is missing here; without it valid data are rejected)txt"},
      {"H7", 1, true,
       R"tex(\varphi(r_{1}(u_{1}))+\sigma^{\prime}(s_{1}(u_{1}))=\sigma(u_{1})+r_{0}d(u_{1}),)tex",
       R"txt(sigma' is applied to Z1-valued arguments; the Z0-component of phi'_E(phi_1(0,u_1)) = phi_0(phi_E(0,u_1)) reads phi(r_1(u_1)) + sigma'(s_1(u_1)) = sigma(u_1) + r_0(d(u_1)))txt"},
  };
  return rows;
}

}  // namespace zinbiel::detail
