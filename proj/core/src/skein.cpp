#include "twinfoam/skein.hpp"

#include "twinfoam/webs.hpp"

namespace twinfoam {

LaurentPolynomial p2_state_sum(const LinkDiagram& d) {
    int n = d.crossing_count();
    LaurentPolynomial bracket_circle = LaurentPolynomial::q(1) + LaurentPolynomial::q(-1);
    LaurentPolynomial total;
    for (std::uint32_t J = 0; J < (1u << n); ++J) {
        int exponent = 0;
        int sign = 1;
        for (int k = 0; k < n; ++k) {
            bool oriented = ((J >> k) & 1u) == (d.crossings()[k].sign > 0 ? 1u : 0u);
            if (d.crossings()[k].sign > 0) {
                exponent += oriented ? 1 : 2;
            } else {
                exponent -= oriented ? 1 : 2;
            }
            if (!oriented) sign = -sign;
        }
        int comps = count_components(d, J);
        total += LaurentPolynomial::monomial(sign, exponent) * bracket_circle.pow(unsigned(comps));
    }
    return total;
}

} // namespace twinfoam
