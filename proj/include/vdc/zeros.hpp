#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vdc/arith.hpp"
#include "vdc/characters.hpp"

// Ingestion of L-function zero data and the scale/branch decision logic.
// Zeros are data, never computed here: files are parsed, range-checked and
// conjugate-closed, then consumed as hypotheses by the rest of the pipeline.

namespace vdc {

struct ZeroRecord {
    double beta = 0.5;          // real part; sigma = 1 - beta
    double gamma = 0;           // imaginary part
    i64 conductor = 1;
    bool real_character = false;
    int multiplicity = 1;

    double sigma() const { return 1.0 - beta; }
};

class ZeroSet {
  public:
    ZeroSet() = default;
    ZeroSet(std::vector<ZeroRecord> records, double Q, double sigma_max,
            std::string source = "");

    static ZeroSet load(const std::string &path);
    static ZeroSet parse(const std::string &json_text, const std::string &source = "inline");
    std::string to_json() const;

    const std::vector<ZeroRecord> &records() const { return records_; }
    double threshold() const { return Q_; }
    double sigma_max() const { return sigma_max_; }
    const std::string &source() const { return source_; }
    bool empty() const { return records_.empty(); }
    size_t conjugates_added() const { return conjugates_added_; }

    // Records with sigma <= s, |gamma| <= Q, conductor <= Q, sorted by
    // decreasing real part (so the leading entry has the smallest sigma).
    ZeroSet filtered(double Q, double s) const;

  private:
    void close_under_conjugation();
    void validate() const;

    std::vector<ZeroRecord> records_;
    double Q_ = 0;
    double sigma_max_ = 1.0;
    std::string source_;
    size_t conjugates_added_ = 0;
};

enum class ScaleBranch { unexceptional, exceptional };

struct ScaleConstants {
    double lambda1 = 0.1;   // never pinned by theory; explicit knobs
    double B = 16;
    double exc_conductor_exp = 0.5;
};

struct ScaleCertificate {
    double T = 0;
    ScaleBranch branch = ScaleBranch::unexceptional;
    double unexceptional_sum = 0;   // sum N^{-sigma_j/16}
    double exceptional_lhs = 0;     // N^{-sigma_1/16} + 2 M_eff * tail
    double m_eff = 0;
    size_t zero_count = 0;
    std::optional<ZeroRecord> exceptional_zero;
    ScaleConstants constants;
    std::string to_json() const;
};

// Try T = X then T = X^kappa; at each scale test the unexceptional mass
// condition, then the exceptional one; throws with both residuals if
// neither branch is satisfiable at either scale.
ScaleCertificate scale_select(double X, double kappa, const ZeroSet &zs, double m_eff,
                              const ScaleConstants &constants = {});

struct ExplicitFormulaResult {
    double psi_sum = 0;        // sum_{n <= x} Lambda(n) psi(n), real part
    double zero_sum = 0;       // sum eps_rho x^rho / rho, real part
    double residual = 0;
    double scale = 0;          // x^{1 - sigma_max} + x / Q
    size_t zeros_used = 0;
};

// Residual of the truncated explicit formula for the (possibly imprimitive)
// character psi mod r against the zero data of its primitive inducer.
ExplicitFormulaResult explicit_formula_check(const DirichletCharacter &psi, double x,
                                             const ZeroSet &zs, double Q);

struct PageBoundReport {
    bool pass = false;
    double sigma1 = 0;
    double threshold = 0;      // c / q1
};

// sigma_1 >= c / q_1 for the tagged exceptional record.
PageBoundReport page_bound_check(const ZeroRecord &exceptional, double c);

} // namespace vdc
