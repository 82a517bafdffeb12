#include "hciz/integrals.hpp"

#include <stdexcept>

namespace hciz {

bool string_coeff_bound_check(const Spectrum& spec, int d, int N) {
    if (static_cast<int>(spec.a.size()) != N || static_cast<int>(spec.b.size()) != N ||
        static_cast<int>(spec.c.size()) != N)
        throw std::invalid_argument("string_coeff_bound_check: spectra must have length N");
    for (const auto* list : {&spec.a, &spec.b, &spec.c})
        for (const GaussianRational& x : *list)
            if (x.abs2() > 1)
                throw std::invalid_argument("string_coeff_bound_check: entry of modulus > 1");

    // I_N(d) and J_N(d) are the d!-stripped degree terms, I_N = 1 + sum z^d/d! I_N(d)
    GaussianRational id = hciz_degree_coefficients(spec.a, spec.b, d).at(d);
    GaussianRational jd = bgw_degree_coefficients(spec.c, d).at(d);
    Rational dfact(factorial(static_cast<unsigned>(d)));
    id = dfact * id;
    jd = dfact * jd;

    Rational ibound = pow_rat(Rational(N), 4 * d);
    Rational jbound = lis_probability(d, N) * pow_rat(Rational(N), 2 * d);
    return id.abs2() <= ibound && jd.abs2() <= jbound * jbound;
}

}  // namespace hciz
