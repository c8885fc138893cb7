#include "vdc/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace vdc {

ZeroSet::ZeroSet(std::vector<ZeroRecord> records, double Q, double sigma_max, std::string source)
    : records_(std::move(records)), Q_(Q), sigma_max_(sigma_max), source_(std::move(source)) {
    validate();
    close_under_conjugation();
}

void ZeroSet::validate() const {
    size_t line = 0;
    for (const auto &z : records_) {
        line++;
        std::ostringstream where;
        where << "zero record " << line << ": ";
        if (!(z.beta > 0 && z.beta < 1))
            throw std::invalid_argument(where.str() + "beta must lie in (0, 1)");
        if (z.multiplicity < 1)
            throw std::invalid_argument(where.str() + "multiplicity must be >= 1");
        if (z.conductor < 1)
            throw std::invalid_argument(where.str() + "conductor must be >= 1");
        if (z.sigma() > sigma_max_ + 1e-12)
            throw std::invalid_argument(where.str() + "sigma exceeds sigma_max");
        if (std::abs(z.gamma) > Q_ + 1e-12)
            throw std::invalid_argument(where.str() + "height exceeds Q");
        if (static_cast<double>(z.conductor) > Q_ + 1e-12)
            throw std::invalid_argument(where.str() + "conductor exceeds Q");
    }
}

void ZeroSet::close_under_conjugation() {
    std::vector<ZeroRecord> extra;
    for (const auto &z : records_) {
        if (z.gamma == 0) continue;
        bool found = false;
        for (const auto &w : records_)
            if (w.conductor == z.conductor && std::abs(w.beta - z.beta) < 1e-12 &&
                std::abs(w.gamma + z.gamma) < 1e-12) {
                found = true;
                break;
            }
        if (!found) {
            ZeroRecord c = z;
            c.gamma = -z.gamma;
            extra.push_back(c);
        }
    }
    conjugates_added_ = extra.size();
    records_.insert(records_.end(), extra.begin(), extra.end());
}

ZeroSet ZeroSet::load(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open zero file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    if (text.find_first_not_of(" \t\r\n") == std::string::npos)
        return ZeroSet({}, 0, 1.0, path);       // empty body: no-zero mode
    return parse(text, path);
}

ZeroSet ZeroSet::parse(const std::string &json_text, const std::string &source) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument("zero file " + source + ": " + e.what());
    }
    std::vector<ZeroRecord> rec;
    size_t line = 0;
    for (const auto &z : j.value("zeros", nlohmann::json::array())) {
        line++;
        std::ostringstream where;
        where << "zero file " << source << ", record " << line << ": ";
        for (const char *key : {"beta", "gamma", "conductor"})
            if (!z.contains(key)) throw std::invalid_argument(where.str() + "missing field " + key);
        rec.push_back(ZeroRecord{z.at("beta").get<double>(), z.at("gamma").get<double>(),
                                 z.at("conductor").get<i64>(), z.value("real_character", false),
                                 z.value("multiplicity", 1)});
    }
    return ZeroSet(std::move(rec), j.value("Q", 0.0), j.value("sigma_max", 1.0), source);
}

std::string ZeroSet::to_json() const {
    nlohmann::json zeros = nlohmann::json::array();
    for (const auto &z : records_)
        zeros.push_back({{"beta", z.beta},
                         {"gamma", z.gamma},
                         {"conductor", z.conductor},
                         {"real_character", z.real_character},
                         {"multiplicity", z.multiplicity}});
    nlohmann::json j{{"sigma_max", sigma_max_}, {"Q", Q_}, {"zeros", zeros}};
    return j.dump(2);
}

ZeroSet ZeroSet::filtered(double Q, double s) const {
    std::vector<ZeroRecord> out;
    for (const auto &z : records_)
        if (z.sigma() <= s + 1e-15 && std::abs(z.gamma) <= Q + 1e-15 &&
            static_cast<double>(z.conductor) <= Q + 1e-15)
            out.push_back(z);
    std::sort(out.begin(), out.end(), [](const ZeroRecord &a, const ZeroRecord &b) {
        if (a.beta != b.beta) return a.beta > b.beta;
        if (a.conductor != b.conductor) return a.conductor < b.conductor;
        return a.gamma < b.gamma;
    });
    ZeroSet zs;
    zs.records_ = std::move(out);
    zs.Q_ = Q;
    zs.sigma_max_ = s;
    zs.source_ = source_;
    return zs;
}

std::string ScaleCertificate::to_json() const {
    nlohmann::json j{{"T", T},
                     {"branch", branch == ScaleBranch::unexceptional ? "unexceptional" : "exceptional"},
                     {"unexceptional_sum", unexceptional_sum},
                     {"exceptional_lhs", exceptional_lhs},
                     {"m_eff", m_eff},
                     {"zero_count", zero_count},
                     {"constants",
                      {{"lambda1", constants.lambda1},
                       {"B", constants.B},
                       {"exc_conductor_exp", constants.exc_conductor_exp}}}};
    if (exceptional_zero)
        j["exceptional_zero"] = {{"beta", exceptional_zero->beta},
                                 {"gamma", exceptional_zero->gamma},
                                 {"conductor", exceptional_zero->conductor}};
    return j.dump(2);
}

namespace {

double weight_mass(const std::vector<ZeroRecord> &rs, double N, size_t skip_leading) {
    double s = 0;
    for (size_t i = skip_leading; i < rs.size(); i++)
        s += rs[i].multiplicity * std::pow(N, -rs[i].sigma() / 16.0);
    return s;
}

} // namespace

ScaleCertificate scale_select(double X, double kappa, const ZeroSet &zs, double m_eff,
                              const ScaleConstants &constants) {
    if (!(kappa > 0 && kappa < 1)) throw std::invalid_argument("scale_select: kappa must be in (0,1)");
    if (X < std::pow(10.0, 1.0 / kappa) / 1e6)
        throw std::invalid_argument("scale_select: X too small for the scale split");
    std::vector<double> scales{X, std::pow(X, kappa)};
    std::ostringstream diag;
    for (double T : scales) {
        ZeroSet f = zs.filtered(T, zs.sigma_max());
        const auto &rs = f.records();
        ScaleCertificate cert;
        cert.T = T;
        cert.m_eff = m_eff;
        cert.zero_count = rs.size();
        cert.constants = constants;
        cert.unexceptional_sum = weight_mass(rs, X, 0);
        if (cert.unexceptional_sum <= 1.0 / (2.0 * m_eff)) {
            cert.branch = ScaleBranch::unexceptional;
            return cert;
        }
        // Exceptional branch: leading zero real, simple, real character,
        // small conductor relative to the scale.
        if (!rs.empty()) {
            const ZeroRecord &lead = rs.front();
            bool shape_ok = lead.gamma == 0 && lead.real_character && lead.multiplicity == 1 &&
                            static_cast<double>(lead.conductor) <=
                                std::pow(T, constants.exc_conductor_exp) + 1e-12;
            double lhs = std::pow(X, -lead.sigma() / 16.0) + 2.0 * m_eff * weight_mass(rs, X, 1);
            cert.exceptional_lhs = lhs;
            if (shape_ok && lhs <= 1.0) {
                cert.branch = ScaleBranch::exceptional;
                cert.exceptional_zero = lead;
                return cert;
            }
            diag << "T=" << T << ": unexceptional mass " << cert.unexceptional_sum
                 << " > " << 1.0 / (2.0 * m_eff) << ", exceptional lhs " << lhs
                 << (shape_ok ? "" : " (leading zero not exceptional-shaped)") << "; ";
        } else {
            diag << "T=" << T << ": unexceptional mass " << cert.unexceptional_sum
                 << " > " << 1.0 / (2.0 * m_eff) << " with no zeros (inconsistent m_eff); ";
        }
    }
    throw std::runtime_error("scale_select: neither branch satisfiable: " + diag.str());
}

ExplicitFormulaResult explicit_formula_check(const DirichletCharacter &psi, double x,
                                             const ZeroSet &zs, double Q) {
    ExplicitFormulaResult out;
    i64 xn = static_cast<i64>(std::floor(x));
    //

    std::complex<double> psi_sum{};
    for (i64 n = 1; n <= xn; n++) {
        LogPrimePower v = von_mangoldt(n);
        if (v.is_zero()) continue;
        psi_sum += v.value() * psi(n);
    }
    out.psi_sum = psi_sum.real();

    const DirichletCharacter inducer =
        psi.is_primitive() ? psi : psi.primitive_inducer();
    std::complex<double> zsum{};
    size_t used = 0;
    for (const auto &z : zs.records()) {
        if (z.conductor != inducer.modulus()) continue;
        if (std::abs(z.gamma) > Q) continue;
        std::complex<double> rho(z.beta, z.gamma);
        zsum -= static_cast<double>(z.multiplicity) * std::exp(rho * std::log(x)) / rho;
        used++;
    }
    if (inducer.is_principal()) zsum += x;       // pole contribution
    out.zero_sum = zsum.real();
    out.zeros_used = used;
    out.residual = std::abs(out.psi_sum - out.zero_sum);
    out.scale = std::pow(x, 1.0 - zs.sigma_max()) + x / std::max(Q, 1.0);
    return out;
}

PageBoundReport page_bound_check(const ZeroRecord &exceptional, double c) {
    PageBoundReport r;
    r.sigma1 = exceptional.sigma();
    r.threshold = c / static_cast<double>(exceptional.conductor);
    r.pass = r.sigma1 >= r.threshold;
    return r;
}

} // namespace vdc
