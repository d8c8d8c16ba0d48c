#include "modinv/inverse_chain.hpp"

#include <cmath>
#include <stdexcept>

#include "modinv/forward_modular.hpp"
#include "modinv/moduli_reduction.hpp"

namespace modinv {

const std::array<BranchChoice, 6>& all_branch_choices() {
    static const std::array<BranchChoice, 6> choices = {{
        {+1, 0}, {+1, 1}, {+1, 2}, {-1, 0}, {-1, 1}, {-1, 2},
    }};
    return choices;
}

Complex cardano_radical(Complex x, BranchChoice branch) {
    if (!is_finite(x)) throw DomainError("cardano_radical: non-finite input");
    if (branch.inner_sqrt_sign != 1 && branch.inner_sqrt_sign != -1)
        throw std::invalid_argument("cardano_radical: inner_sqrt_sign must be +1 or -1");
    if (x == 0.0) return {};

    const Complex x2 = x * x;
    const Complex r = double(branch.inner_sqrt_sign) * principal_sqrt(x2 - x2 * x);
    // r - x loses all digits when r ~ x (large |x|); the conjugate form
    // -x^3 / (r + x) is exact algebra since r^2 - x^2 = -x^3.
    const Complex diff = r - x;
    const Complex sum = r + x;
    const Complex v = std::abs(sum) > std::abs(diff) ? -(x2 * x) / sum : diff;
    return cbrt_branch(v, branch.cbrt_index);
}

Complex modulus_ratio(Complex x, BranchChoice branch) {
    if (!is_finite(x)) throw DomainError("modulus_ratio: non-finite input");
    if (x == 0.0) return {-1.0, 0.0};
    const Complex w = cardano_radical(x, branch);
    return 1.5 * (x / w + w) - 1.0;
}

Complex modulus_from_ratio(Complex x) {
    if (!is_finite(x)) throw DomainError("modulus_from_ratio: non-finite input");
    const Complex sp = principal_sqrt(x + 4.0);
    const Complex sm = principal_sqrt(x);
    // (sp - sm)(sp + sm) = 4, so 2/(sp + sm) is the cancellation-free twin.
    const Complex diff = sp - sm;
    const Complex sum = sp + sm;
    if (std::abs(sum) > std::abs(diff)) return 2.0 / sum;
    return 0.5 * diff;
}

Complex tau_from_modulus(Complex x, const AgmConfig& cfg) {
    if (!is_finite(x)) throw DomainError("tau_from_modulus: non-finite input");
    if (x == 0.0 || x == 1.0 || x == -1.0)
        throw CuspError("tau_from_modulus: modulus at a cusp");
    const Complex numerator = agm_g(principal_sqrt((1.0 - x) * (1.0 + x)), cfg);
    const Complex denominator = agm_g(x, cfg);
    if (numerator == 0.0 || denominator == 0.0)
        throw CuspError("tau_from_modulus: agm degenerated to zero");
    return Complex{0.0, 1.0} * numerator / denominator;
}

Complex invert_principal(Complex x, const AgmConfig& cfg) {
    return tau_from_modulus(modulus_from_ratio(modulus_ratio(x)), cfg);
}

InversionResult invert_verified(Complex x, double tol, const AgmConfig& cfg) {
    if (!is_finite(x)) throw DomainError("invert_verified: non-finite input");
    if (!(tol > 0.0)) throw std::invalid_argument("invert_verified: tol must be positive");

    int cusp_hits = 0;
    for (const BranchChoice& branch : all_branch_choices()) {
        Complex candidate;
        try {
            candidate = tau_from_modulus(modulus_from_ratio(modulus_ratio(x, branch)), cfg);
        } catch (const CuspError&) {
            ++cusp_hits;
            continue;
        } catch (const ConvergenceError&) {
            continue;
        } catch (const DomainError&) {
            continue;
        }
        if (!(candidate.imag() > 0.0) || !is_finite(candidate)) continue;

        const ReducedPoint reduced = reduce(UpperHalfPoint(candidate));
        Complex forward;
        try {
            forward = j_invariant(reduced.point);
        } catch (const CuspError&) {
            ++cusp_hits;
            continue;
        } catch (const ConvergenceError&) {
            continue;
        }
        const double residual = std::abs(forward - x) / (1.0 + std::abs(x));
        if (residual <= tol) return {reduced.point, branch, residual};
    }
    if (cusp_hits == static_cast<int>(all_branch_choices().size()))
        throw CuspError("invert_verified: every branch hit a cusp");
    throw NoBranchFoundError("invert_verified: no branch met the residual tolerance");
}

} // namespace modinv
