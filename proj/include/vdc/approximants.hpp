#pragma once

#include <map>
#include <optional>

#include "vdc/characters.hpp"
#include "vdc/fourier.hpp"

// Truncated and completed approximants: the classical Ramanujan-series
// approximant to the von Mangoldt function, its character twists, the
// divisor-squared proxy, their divisor-closed (completed) forms, and the
// sharp approximant carrying zero data.

namespace vdc {

enum class ApproximantKind {
    lambda_truncated,   // sum_{q <= Q} (mu(q)/phi(q)) c_q
    char_truncated,     // characters-twisted truncation
    h_truncated,        // sum_{q <= Q} eta(q) c_q, eta(q) = mu^2(q) prod 3/(p+3)
    lambda_completed,   // sum over squarefree q | prod of primes <= R
    char_completed,
    h_completed,
};

struct ApproximantSpec {
    ApproximantKind kind;
    double threshold = 1;                       // Q or R
    std::optional<DirichletCharacter> chi;      // required for char kinds
};

// eta(q) = mu^2(q) prod_{p|q} 3/(p+3); mu(q)/phi(q) helper likewise exact.
mpq_class eta_weight(i64 q);
mpq_class mu_over_phi(i64 q);

// The completed construction caps the prime cutoff so one period fits memory.
inline constexpr double kMaxCompletedThreshold = 13.0;

Series build_series(const ApproximantSpec &spec);

// Pointwise values (exact rationals for the principal kinds).
mpq_class lambda_truncated_value(double Q, i64 n);
mpq_class h_truncated_value(double Q, i64 n);
mpq_class lambda_completed_value(double R, i64 n);  // prod_{p <= R} of the local factor
mpq_class h_completed_value(double R, i64 n);
std::complex<double> char_truncated_value(const DirichletCharacter &chi, double Q, i64 n);
std::complex<double> char_completed_value(const DirichletCharacter &chi, double R, i64 n);

// Sharp approximant: signed components (eps, rho, chi) closed under
// conjugation, eps = +1 exactly at rho = 1 with the principal character.
struct SharpComponent {
    int eps = 1;
    std::complex<double> rho{1.0, 0.0};
    DirichletCharacter chi = principal_character();
};

class SharpApproximant {
  public:
    SharpApproximant(double Q, double sigma_max, std::vector<SharpComponent> components);

    double threshold() const { return Q_; }
    double sigma_max() const { return sigma_max_; }
    const std::vector<SharpComponent> &components() const { return components_; }

    std::complex<double> evaluate_complex(i64 n) const;
    double evaluate(i64 n) const;               // asserts imaginary part small

  private:
    double Q_;
    double sigma_max_;
    std::vector<SharpComponent> components_;
};

// lambda_d weights with sum_{q <= Q} v(q) c_q(n) = sum_{d | n, d <= Q} lambda_d,
// lambda_d / d = sum_{d | r <= Q} mu(r/d) v(r).
std::map<i64, mpq_class> sieve_weight_transform(const std::map<i64, mpq_class> &v, i64 Q);

} // namespace vdc
