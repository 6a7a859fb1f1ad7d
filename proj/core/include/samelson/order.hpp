#pragma once

#include "samelson/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace samelson {

/// Instance selector for the Samelson product <e_{m,n}, e_{m,n}> of the
/// generator of pi_{4m-1}(Sp(n)) with the inclusion of the symplectic
/// quasi-projective space Q_{n-m+1}. Requires 1 <= m < n.
struct SamelsonParams {
    long m;
    long n;

    SamelsonParams(long m_, long n_);

    /// Top degree that matters: 2n - 2m + 1, the cap of every series in this
    /// instance and the t-degree read off the Chern character.
    long top_degree() const { return 2 * (n - m) + 1; }

    /// Number of K-theory generators: n - m + 1.
    long generator_count() const { return n - m + 1; }
};

/// One basis generator pushed through the pipeline. The K-theory basis
/// element with index k maps to the class of x^(2k-1), so its Chern
/// coefficient is a_{2n-2m+1, 2k-1}; multiplying by (2n+1)! lands in integral
/// cohomology (phi_value), and the complexification scale sigma of the sphere
/// S^{4(m+k-1)+2} the generator lives over gives the value of psi. Signs are
/// dropped throughout: the subgroup of Z generated by a set is unchanged by
/// negating elements.
struct PsiGenerator {
    long k = 0;
    Rational chern_coeff;
    Integer phi_value;
    int sigma = 0;
    Integer psi_value;
};

/// Outcome of one instance: the generator images, the gcd that generates the
/// image subgroup of H^{4n+2}(X) = Z, and the comparison with the closed form.
struct OrderReport {
    SamelsonParams params;
    std::vector<PsiGenerator> generators;
    Integer computed_order;     // gcd of |psi_value| over all generators
    Integer closed_form_order;  // closed_form(params)
    std::string group_description;  // "Z/d": the group [X, Sp(n)] is cyclic
    bool match = false;
};

/// Lookup for the complexification scale by sphere index. The default is
/// complexification_sigma; tests substitute corrupted tables through this
/// seam to drive the mismatch paths.
using SigmaFn = std::function<int(long)>;

std::vector<PsiGenerator> build_generators(const SamelsonParams& params);
std::vector<PsiGenerator> build_generators(const SamelsonParams& params, const SigmaFn& sigma);

/// (2n+1)!/(2n-2m+1)! for even m, twice that for odd m.
Integer closed_form(const SamelsonParams& params);

OrderReport compute_order(const SamelsonParams& params);
OrderReport compute_order(const SamelsonParams& params, const SigmaFn& sigma);

/// True iff every |psi_value| is an integer multiple of the first one, i.e.
/// the k = 1 generator alone already generates the image subgroup.
bool first_generator_dominates(const SamelsonParams& params);

}  // namespace samelson
