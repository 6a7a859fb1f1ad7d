#include "samelson/order.hpp"

#include "samelson/bott_tables.hpp"
#include "samelson/chern.hpp"
#include "samelson/trunc_series.hpp"

#include <stdexcept>

namespace samelson {

SamelsonParams::SamelsonParams(long m_, long n_) : m(m_), n(n_) {
    if (m < 1 || m >= n)
        throw std::invalid_argument("SamelsonParams: need 1 <= m < n, got m=" +
                                    std::to_string(m) + " n=" + std::to_string(n));
}

std::vector<PsiGenerator> build_generators(const SamelsonParams& params) {
    return build_generators(params, complexification_sigma);
}

std::vector<PsiGenerator> build_generators(const SamelsonParams& params, const SigmaFn& sigma) {
    const long degree = params.top_degree();
    const Integer scale = factorial(2 * params.n + 1);

    std::vector<PsiGenerator> generators;
    generators.reserve(static_cast<size_t>(params.generator_count()));

    // Walk the odd powers x, x^3, ..., x^(2n-2m+1): one multiplication by
    // (e^t - 1)^2 per step instead of an independent pow per generator.
    const TruncSeries base = TruncSeries::exp_minus_one(degree);
    const TruncSeries square = base * base;
    TruncSeries power = base;

    for (long k = 1; k <= params.generator_count(); ++k) {
        PsiGenerator gen;
        gen.k = k;
        gen.chern_coeff = power.coefficient(degree);

        Rational scaled = Rational(scale) * gen.chern_coeff;
        if (!scaled.is_integer())
            throw std::domain_error("integrality violation: (2n+1)! * a_{" +
                                    std::to_string(degree) + "," + std::to_string(2 * k - 1) +
                                    "} = " + scaled.str() + " for m=" + std::to_string(params.m) +
                                    " n=" + std::to_string(params.n));
        gen.phi_value = scaled.to_integer();
        gen.sigma = sigma(params.m + k - 1);
        gen.psi_value = gen.sigma * gen.phi_value;
        generators.push_back(std::move(gen));

        if (k < params.generator_count()) power = power * square;
    }
    return generators;
}

Integer closed_form(const SamelsonParams& params) {
    Integer value = factorial(2 * params.n + 1) / factorial(params.top_degree());
    return (params.m % 2 == 0) ? value : 2 * value;
}

OrderReport compute_order(const SamelsonParams& params) {
    return compute_order(params, complexification_sigma);
}

OrderReport compute_order(const SamelsonParams& params, const SigmaFn& sigma) {
    OrderReport report{params, build_generators(params, sigma), 0, 0, "", false};

    std::vector<Integer> values;
    values.reserve(report.generators.size());
    for (const PsiGenerator& gen : report.generators) values.push_back(abs(gen.psi_value));

    report.computed_order = gcd_all(values);
    report.closed_form_order = closed_form(params);
    report.group_description = "Z/" + report.computed_order.get_str();
    report.match = report.computed_order == report.closed_form_order;
    return report;
}

bool first_generator_dominates(const SamelsonParams& params) {
    std::vector<PsiGenerator> generators = build_generators(params);
    const Integer& first = generators.front().psi_value;
    for (const PsiGenerator& gen : generators) {
        if (!mpz_divisible_p(gen.psi_value.get_mpz_t(), first.get_mpz_t())) return false;
    }
    return true;
}

}  // namespace samelson
