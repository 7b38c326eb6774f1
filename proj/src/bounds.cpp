#include "spectral_chroma/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spectral_chroma/errors.hpp"
#include "spectral_chroma/linalg.hpp"
#include "spectral_chroma/spherical.hpp"

namespace spectral_chroma::bounds {

std::string_view to_string(Provenance p) noexcept {
    switch (p) {
        case Provenance::certified_analytic: return "certified-analytic";
        case Provenance::numerical_scan: return "numerical-scan";
        case Provenance::formula: return "formula";
    }
    return "unknown";
}

std::string_view to_string(Winner w) noexcept {
    switch (w) {
        case Winner::main_theorem: return "main_theorem";
        case Winner::nevo: return "nevo";
        case Winner::tie: return "tie";
    }
    return "unknown";
}

GraphSpectrumResult hoffman_finite(const Graph& graph, bool require_regular) {
    const std::size_t n = graph.vertex_count();
    if (graph.edge_count() == 0) throw DegenerateInput("graph has no edges; Hoffman bound undefined");
    if (n > linalg::kMaxDenseDimension)
        throw DomainError("graph too large for dense eigensolve (n = " + std::to_string(n) + ")");
    const bool regular = graph.is_regular();
    if (require_regular && !regular)
        throw PreconditionViolation("regular graph", "graph was declared regular but degrees differ");

    const auto eig = linalg::symmetric_eigenvalues(graph.adjacency_matrix(), n);
    GraphSpectrumResult out;
    out.n = n;
    out.edges = graph.edge_count();
    out.regular = regular;
    out.M = eig.back();
    out.m = eig.front();
    out.alpha_bound = -out.m / (out.M - out.m);
    out.chi_bound = (out.M - out.m) / (-out.m);
    return out;
}

void HoffmanInputs::validate() const {
    if (!std::isfinite(M) || !std::isfinite(m) || !std::isfinite(R) || !std::isfinite(epsilon))
        throw DomainError("Hoffman inputs must be finite");
    if (m > M) throw DomainError("Hoffman inputs need m <= M");
    if (epsilon < 0.0) throw DomainError("Hoffman inputs need epsilon >= 0");
}

OperatorBound hoffman_operator(const HoffmanInputs& in) {
    in.validate();
    const double denom = in.R - in.m - in.epsilon;
    if (!(denom > 0.0))
        throw PreconditionViolation("R - m - epsilon > 0",
                                    "Hoffman operator bound needs R - m - epsilon > 0, got " +
                                        std::to_string(denom));
    if (!(in.m < 0.0))
        throw PreconditionViolation("m < 0", "chromatic bound needs m < 0, got m = " + std::to_string(in.m));
    OperatorBound out;
    out.alpha_bound = (-in.m + 2.0 * in.epsilon) / denom;
    out.chi_bound = (in.M - in.m) / (-in.m);
    out.alpha_vacuous = out.alpha_bound > 1.0;
    out.chi_vacuous = out.chi_bound < 1.0;
    return out;
}

NevoBeta nevo_beta(double r, double lambda, std::optional<double> c_exponent) {
    if (!(r > 0.0)) throw DomainError("nevo_beta needs r > 0");
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw DomainError("spectral gap lambda must be positive, got " + std::to_string(lambda));
    const double gap_factor = 1.0 / std::sqrt(std::abs(1.0 + 4.0 * lambda));
    double beta;
    if (lambda >= 0.25) {
        const double decay = std::exp(-0.5 * r);
        beta = std::min(0.5 * r * decay, (1.0 + gap_factor) * decay);
    } else {
        if (!c_exponent)
            throw DomainError("lambda < 1/4 needs the exponent C in [0, 1)");
        const double c = *c_exponent;
        if (!(c >= 0.0 && c < 1.0))
            throw DomainError("exponent C must lie in [0, 1), got " + std::to_string(c));
        const double decay = std::exp(-0.5 * c * r);
        beta = std::min(0.5 * r * decay, gap_factor * decay);
    }
    return {beta, beta / (1.0 + beta)};
}

std::optional<double> parlier_petit_upper(double r) {
    if (!(r > 5.0)) return std::nullopt;
    return 5.0 * (std::ceil(r / std::log(4.0)) + 1.0);
}

BoundReport main_bounds(double r, bool use_scanned_m, const spectrum::SpectrumSummary* summary) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("main_bounds needs finite r > 0");
    BoundReport rep;
    rep.r = r;
    const double env = spherical::envelope(r);
    rep.ind_ratio_relaxed = env;
    rep.chi_lower = r > 700.0 ? std::exp(0.5 * r - std::log1p(r)) : std::exp(0.5 * r) / (r + 1.0);

    rep.m_used = -env;
    rep.m_provenance = Provenance::certified_analytic;
    if (use_scanned_m) {
        if (!summary) throw DomainError("use_scanned_m requires a spectrum summary");
        if (summary->r != r)
            throw DomainError("spectrum summary was computed for r = " + std::to_string(summary->r));
        rep.m_used = summary->m_numeric;
        rep.m_provenance = Provenance::numerical_scan;
    }

    // The constant function is an exact eigenvector: R = M = 1, epsilon = 0.
    const auto op = hoffman_operator({1.0, rep.m_used, 1.0, 0.0});
    rep.ind_ratio_exact = op.alpha_bound;
    rep.ind_ratio_exact_vacuous = op.alpha_vacuous;
    rep.ind_ratio_relaxed_vacuous = rep.ind_ratio_relaxed > 1.0;
    rep.chi_lower_vacuous = rep.chi_lower < 1.0;
    rep.pp_chi_upper = parlier_petit_upper(r);
    return rep;
}

BoundReport compare(double r, std::optional<double> lambda, std::optional<double> c_exponent) {
    BoundReport rep = main_bounds(r);
    if (!lambda) return rep;
    const NevoBeta nb = nevo_beta(r, *lambda, c_exponent);
    NevoComparison cmp{*lambda, *lambda < 0.25 ? c_exponent : std::nullopt, nb.beta, nb.alpha_bound,
                       Winner::tie};
    const double diff = nb.alpha_bound - rep.ind_ratio_exact;
    if (std::abs(diff) > 1e-12) cmp.winner = diff < 0.0 ? Winner::nevo : Winner::main_theorem;
    rep.nevo = cmp;
    return rep;
}

}  // namespace spectral_chroma::bounds
