#include "vdc/damping.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "vdc/approximants.hpp"
#include "vdc/parallel.hpp"

namespace vdc {

namespace {

i64 ipow(i64 b, int e) {
    i64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

PhiAtom PhiAtom::make(i64 r, i64 b) {
    if (r < 1) throw std::invalid_argument("PhiAtom: r must be >= 1");
    __int128 r3 = static_cast<__int128>(r) * r * r;
    if (r3 > kMaxDenominator) throw std::invalid_argument("PhiAtom: r^3 exceeds guard");
    i64 m = static_cast<i64>(r3);
    b %= m;
    if (b < 0) b += m;
    return PhiAtom{r, b};
}

PhiAtom PhiAtom::conjugate() const {
    i64 m = r * r * r;
    return PhiAtom{r, (m - b) % m};
}

i64 PhiAtom::period() const {
    i64 m = r * r * r;
    i64 phase_period = (b == 0) ? 1 : m / gcd(b, m);
    return lcm(r, phase_period);
}

std::complex<double> PhiAtom::evaluate(i64 n) const {
    i64 nn = ((n % r) + r) % r;
    if (nn != 0) return {};
    i64 m = r * r * r;
    return std::pow(static_cast<double>(r), 5.0 / 6.0) * unit_phase(Freq::make(b, m), n);
}

Series atom_series(const PhiAtom &a) {
    Series out;
    double coef = std::pow(static_cast<double>(a.r), -1.0 / 6.0);
    i64 m = a.r * a.r * a.r;
    for (i64 t = 0; t < a.r; t++)
        out.add_term(Freq::make(t, a.r) + Freq::make(a.b, m), coef);
    return out;
}

DampingCombination::DampingCombination(std::map<PhiAtom, double> weights, std::vector<i64> P)
    : weights_(std::move(weights)), P_(std::move(P)) {
    double total = 0;
    for (const auto &[a, w] : weights_) {
        if (w < -1e-15) throw std::invalid_argument("DampingCombination: negative weight");
        total += w;
        for (i64 p : P_)
            if (a.r % p != 0)
                throw std::invalid_argument("DampingCombination: atom modulus misses a tagged prime");
    }
    if (total > 1.0 + 1e-9) throw std::invalid_argument("DampingCombination: weights exceed 1");
}

double DampingCombination::total_weight() const {
    double t = 0;
    for (const auto &[a, w] : weights_) t += w;
    return t;
}

double DampingCombination::weight_of(const PhiAtom &a) const {
    auto it = weights_.find(a);
    return it == weights_.end() ? 0.0 : it->second;
}

std::complex<double> DampingCombination::evaluate(i64 n) const {
    std::complex<double> acc{};
    for (const auto &[a, w] : weights_) acc += w * a.evaluate(n);
    return acc;
}

Series DampingCombination::to_series() const {
    Series out;
    for (const auto &[a, w] : weights_) {
        if (w == 0) continue;
        Series s = atom_series(a);
        for (const auto &[f, c] : s.terms()) out.add_term(f, c * w);
    }
    return out;
}

i64 DampingCombination::period() const {
    i64 m = 1;
    for (const auto &[a, w] : weights_) {
        (void)w;
        m = lcm(m, a.period());
        if (m > kMaxDenominator) throw std::invalid_argument("DampingCombination: period exceeds guard");
    }
    return m;
}

DampingCombination DampingCombination::real_part() const {
    std::map<PhiAtom, double> w;
    for (const auto &[a, x] : weights_) {
        w[a] += x / 2;
        w[a.conjugate()] += x / 2;
    }
    return DampingCombination(std::move(w), P_);
}

DampingCombination DampingCombination::truncated(i64 X) const {
    DampingCombination out;
    out.weights_.clear();
    for (const auto &[a, x] : weights_)
        if (a.r <= X) out.weights_[a] = x;
    out.P_ = P_;
    return out;
}

DampingCombination DampingCombination::scaled(double s) const {
    DampingCombination out;
    out.weights_.clear();
    for (const auto &[a, x] : weights_) out.weights_[a] = x * s;
    out.P_ = P_;
    return out;
}

std::string DampingCombination::to_json(double m_eff) const {
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto &[a, w] : weights_) {
        std::ostringstream ws;
        ws.precision(17);
        ws << w;
        atoms.push_back({{"r", a.r}, {"b", a.b}, {"alpha", ws.str()}});
    }
    nlohmann::json j{{"atoms", atoms}, {"P", P_}, {"M_eff", m_eff}};
    return j.dump(2);
}

DampingCombination DampingCombination::from_json(const std::string &text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::map<PhiAtom, double> w;
    for (const auto &a : j.at("atoms"))
        w[PhiAtom::make(a.at("r").get<i64>(), a.at("b").get<i64>())] +=
            std::stod(a.at("alpha").get<std::string>());
    std::vector<i64> P = j.value("P", std::vector<i64>{});
    return DampingCombination(std::move(w), std::move(P));
}

bool default_guard_divides(i64 r) {
    if (r < 1) return false;
    for (auto [p, e] : factorize(r).factors) {
        int cap = p == 2 ? 6 : p == 3 ? 4 : p == 5 ? 3 : p == 7 ? 2 : (p <= 50 ? 1 : 0);
        if (e > cap) return false;
    }
    return true;
}

mpz_class default_modulus_guard() {
    mpz_class g = 64 * 81;
    g *= 125 * 49;
    for (i64 p : primes_upto(50))
        if (p > 7) g *= p;
    return g;
}

int OmegaTable::operator()(i64 p) const {
    if (p == 2) return 7;
    if (p <= 17) return 3;
    if (p <= (i64(1) << 18)) return 2;
    return 1;
}

mpz_class OmegaTable::exact_constant() const {
    mpz_class m = 7;
    for (i64 p : primes_upto(1 << 18))
        if (p >= 3 && p <= 17) m *= 3;
        else if (p >= 19) m *= 2;
    return m;
}

double OmegaTable::log2_constant() const {
    double l = std::log2(7.0);
    size_t count2 = 0;
    for (i64 p : primes_upto(1 << 18)) {
        if (p >= 3 && p <= 17) l += std::log2(3.0);
        else if (p >= 19) count2++;
    }
    return l + static_cast<double>(count2);
}

namespace {

// Weighted atoms from one prime-power step; weights already divided by
// omega(p), so the combination stays convex.
struct LocalResult {
    std::map<PhiAtom, double> atoms;
    DominationCase taken;
};

// Dominator for chi(n+1) 1_{(p, n-1)=1} Atom(p^beta, a) with chi primitive
// mod p^t.  Three regimes: Gauss-sum bound for small beta (and the two
// smallest 2-power conductors), the identity regime beta >= t, and the
// polynomial-phase regime in between, which splits into a purely linear case
// and a quadratic case handled by a geometric ladder of finer atoms.
LocalResult dominate_prime_power(const DirichletCharacter &chi, i64 p, int t, int beta, i64 a,
                                 const OmegaTable &omega) {
    LocalResult res;
    i64 pt = ipow(p, t);

    auto twist = [&](PhiAtom atom) {
        // Fold the input phase e(an/p^{3 beta}) into the atom parameter; the
        // atom modulus p^g always has g >= min(beta, ...) large enough.
        if (a == 0) return atom;
        int g = 0;
        i64 v = atom.r;
        while (v % p == 0) { v /= p; g++; }
        if (g < beta) throw std::logic_error("dominate_prime_power: atom coarser than input");
        i64 m = atom.r * atom.r * atom.r;
        i64 shift = a % m;
        for (int k = 0; k < 3 * (g - beta); k++) shift = static_cast<i64>(static_cast<__int128>(shift) * p % m);
        return PhiAtom::make(atom.r, atom.b + shift);
    };

    if (beta >= t) {
        // On multiples of p^beta both character factors equal 1.
        res.taken = DominationCase::trivial;
        res.atoms[twist(PhiAtom::make(ipow(p, beta), 0))] = 1.0 / omega(p);
        return res;
    }
    if (3 * beta <= t || pt == 2 || pt == 4) {
        res.taken = DominationCase::gauss;
        res.atoms[twist(PhiAtom::make(pt, 0))] = 1.0 / omega(p);
        return res;
    }

    // t/3 < beta < t, p^beta != 2: the character is a degree <= 2 polynomial
    // phase on the progression 1 + p^beta Z.
    PostnikovPolynomial f = postnikov(chi, beta);
    i64 md = f.mod; // p^{t - beta}
    i64 a1 = !f.coeffs.empty() ? f.coeffs[0] % md : 0;
    i64 a2 = f.coeffs.size() >= 2 ? f.coeffs[1] % md : 0;
    for (size_t k = 2; k < f.coeffs.size(); k++)
        if (f.coeffs[k] % md != 0) throw std::logic_error("dominate_prime_power: cubic phase");

    auto linear_atom = [&](int extra) {
        // Atom(p^{beta+extra}, b) carrying the phase e(a1 n / p^t); valid
        // since 3(beta+extra) > t here.
        int g = beta + extra;
        i64 r = ipow(p, g);
        i64 m = r * r * r;
        i64 shift = a1 % m;
        for (int k = 0; k < 3 * g - t; k++) shift = static_cast<i64>(static_cast<__int128>(shift) * p % m);
        return twist(PhiAtom::make(r, shift));
    };

    if (a2 == 0) {
        res.taken = DominationCase::linear;
        res.atoms[linear_atom(0)] = 1.0 / omega(p);
        return res;
    }

    res.taken = DominationCase::quadratic;
    double scale = (p == 2) ? std::sqrt(2.0) : 1.0;
    double total = 0;
    for (int u = 0; u <= t - beta; u++) {
        double alpha = scale * std::pow(static_cast<double>(p), -std::max(u, 1) / 3.0);
        res.atoms[linear_atom(u)] += alpha / omega(p);
        total += alpha;
    }
    if (total > omega(p) + 1e-12)
        throw std::logic_error("dominate_prime_power: ladder mass exceeds omega");
    return res;
}

std::pair<bool, double> verify_domination(const DirichletCharacter &chi,
                                          const DampingCombination &F,
                                          const DampingCombination &Ftilde, double m_p) {
    i64 q = chi.modulus();
    i64 period = lcm(lcm(q, F.period()), Ftilde.period());
    std::vector<std::complex<double>> lhs(static_cast<size_t>(period));
    for (i64 n = 0; n < period; n++) {
        if (q > 1 && gcd(((n - 1) % q + q) % q, q) != 1) continue;
        std::complex<double> cv = chi(n + 1);
        lhs[static_cast<size_t>(n)] = cv * F.evaluate(n);
    }
    auto lhat = period >= 512 ? dft_parallel(lhs) : dft_serial(lhs);
    Series rt = Ftilde.to_series();
    bool ok = true;
    double worst = 0;
    for (i64 k = 0; k < period; k++) {
        double lv = std::abs(lhat[static_cast<size_t>(k)]);
        double rv = m_p * rt.coefficient(Freq::make(k, period)).real();
        double slack = rv + 1e-9 - lv;
        if (slack < worst) worst = slack;
        if (slack < 0) ok = false;
    }
    return {ok, worst};
}

} // namespace

DominationResultF dominate_character(const DirichletCharacter &chi, const DampingCombination &F,
                                     const OmegaTable &omega, bool verify, i64 modulus_guard) {
    if (!chi.is_primitive())
        throw std::invalid_argument("dominate_character: character must be primitive");
    auto in_guard = [&](i64 r) {
        return modulus_guard == 0 ? default_guard_divides(r) : modulus_guard % r == 0;
    };
    i64 q = chi.modulus();
    if (!in_guard(q))
        throw std::invalid_argument("dominate_character: conductor does not divide the guard modulus");

    FactoredInt qf = factorize(q);
    std::vector<i64> P;
    for (auto [p, t] : qf.factors) P.push_back(p);

    DominationCertificate cert;
    cert.m_p = 1;
    for (auto [p, t] : qf.factors) cert.m_p *= omega(p);

    std::map<PhiAtom, double> result;
    bool cases_recorded = false;
    for (const auto &[atom, weight] : F.weights()) {
        if (weight == 0) continue;
        if (!in_guard(atom.r))
            throw std::invalid_argument("dominate_character: atom modulus does not divide the guard");

        // CRT split of the atom phase: b/r^3 = b0/r0^3 + sum_p a_p/p^{3 beta_p}.
        i64 m_full = atom.r * atom.r * atom.r;
        i64 r0 = atom.r;
        std::vector<LocalResult> locals;
        for (size_t i = 0; i < qf.factors.size(); i++) {
            auto [p, t] = qf.factors[i];
            int beta = 0;
            while (r0 % p == 0) { r0 /= p; beta++; }
            i64 rp3 = ipow(p, 3 * beta);
            i64 ap = 0;
            if (rp3 > 1) {
                i64 rest = m_full / rp3;
                ap = static_cast<i64>(static_cast<__int128>(atom.b % rp3) *
                                      mod_inverse(rest % rp3, rp3) % rp3);
            }
            DirichletCharacter chi_p(ipow(p, t), {chi.exponents()[i]});
            auto local = dominate_prime_power(chi_p, p, t, beta, ap, omega);
            locals.push_back(std::move(local));
        }
        if (!cases_recorded) {
            for (size_t i = 0; i < qf.factors.size(); i++) {
                int beta = 0;
                i64 rr = atom.r;
                while (rr % qf.factors[i].first == 0) { rr /= qf.factors[i].first; beta++; }
                cert.cases.push_back({qf.factors[i].first, qf.factors[i].second, beta, locals[i].taken});
            }
            cases_recorded = true;
        }
        i64 b0 = 0;
        if (r0 > 1) {
            i64 r03 = r0 * r0 * r0;
            b0 = static_cast<i64>(static_cast<__int128>(atom.b % r03) *
                                  mod_inverse((m_full / r03) % r03, r03) % r03);
        }

        // Combine the coprime remainder with one atom choice per prime.
        std::vector<std::pair<PhiAtom, double>> partial{{PhiAtom::make(r0, b0), weight}};
        for (const auto &loc : locals) {
            std::vector<std::pair<PhiAtom, double>> next;
            for (const auto &[base, wb] : partial) {
                for (const auto &[la, wl] : loc.atoms) {
                    i64 rc = base.r * la.r;
                    Freq phase = Freq::make(base.b, base.r * base.r * base.r) +
                                 Freq::make(la.b, la.r * la.r * la.r);
                    __int128 m3 = static_cast<__int128>(rc) * rc * rc;
                    if (m3 % phase.q != 0) throw std::logic_error("dominate_character: phase misaligned");
                    i64 bc = static_cast<i64>(static_cast<__int128>(phase.a) * (m3 / phase.q) % m3);
                    next.emplace_back(PhiAtom::make(rc, bc), wb * wl);
                }
            }
            partial = std::move(next);
        }
        for (const auto &[a, w] : partial) result[a] += w;
    }

    DominationResultF out{DampingCombination(std::move(result), P), cert};
    if (verify) {
        auto [ok, slack] = verify_domination(chi, F, out.dominator, cert.m_p);
        out.certificate.verified = ok;
        out.certificate.worst_slack = slack;
    }
    return out;
}

DirichletCharacter default_resolver(const ZeroRecord &z) {
    auto prims = primitive_characters(z.conductor);
    if (prims.empty())
        throw std::invalid_argument("default_resolver: no primitive character at conductor");
    if (z.real_character) {
        for (auto &c : prims)
            if (c.is_real()) return c;
    }
    return prims.front();
}

namespace {

// One side of the assembled product inequality over a full period:
// values of scale * g+(n) f-(n) h(n) D(n) [E(n)].
std::vector<std::complex<double>>
assembled_values(i64 period, double scale, const std::function<std::complex<double>(i64)> &gplus,
                 i64 T, const DampingCombination &D, i64 divisor) {
    std::vector<std::complex<double>> vals(static_cast<size_t>(period));
    for (i64 n = 0; n < period; n++) {
        if (divisor > 1 && n % divisor != 0) continue;
        std::complex<double> v = gplus(n + 1);
        if (v == std::complex<double>{}) continue;
        mpq_class fm = lambda_completed_value(static_cast<double>(T), n - 1 + period);
        mpq_class h = h_completed_value(static_cast<double>(T), n);
        vals[static_cast<size_t>(n)] = scale * v * fm.get_d() * h.get_d() * D.evaluate(n);
    }
    return vals;
}

} // namespace

DampingBuildReport build_damping(const ZeroSet &zeros, const CharacterResolver &resolve,
                                 const DampingBuildConfig &cfg) {
    DampingBuildReport rep;
    rep.exceptional = cfg.exceptional;

    ZeroSet sorted = zeros.filtered(zeros.threshold(), zeros.sigma_max());
    const auto &rs = sorted.records();
    const double N = cfg.N;

    auto mass = [&](size_t from) {
        double s = 0;
        for (size_t j = from; j < rs.size(); j++)
            s += rs[j].multiplicity * std::pow(N, -rs[j].sigma() / 16.0);
        return s;
    };

    if (!cfg.exceptional) {
        double s_all = mass(0);
        if (!(s_all < 1.0 / (2.0 * cfg.m_eff))) {
            std::ostringstream os;
            os << "build_damping: convergence precondition fails: sum N^{-sigma/16} = " << s_all
               << " >= " << 1.0 / (2.0 * cfg.m_eff);
            throw std::runtime_error(os.str());
        }
    } else {
        if (rs.empty()) throw std::invalid_argument("build_damping: exceptional branch needs a zero");
        double lhs = std::pow(N, -rs[0].sigma() / 16.0) + 2.0 * cfg.m_eff * mass(1);
        if (lhs > 1.0) {
            std::ostringstream os;
            os << "build_damping: exceptional mass condition fails: " << lhs << " > 1";
            throw std::runtime_error(os.str());
        }
    }

    size_t first = cfg.exceptional ? 1 : 0;
    std::vector<DirichletCharacter> chars;
    std::vector<double> sigma;
    for (size_t j = first; j < rs.size(); j++) {
        chars.push_back(resolve(rs[j]));
        sigma.push_back(rs[j].sigma());
    }

    OmegaTable omega;
    // Depth-limited tuple expansion; each level applies one more domination.
    struct Node {
        DampingCombination psi;
        double weight;
    };
    std::vector<Node> level{{DampingCombination{}, 1.0}};
    std::map<PhiAtom, double> dmap{{PhiAtom{1, 0}, 1.0}};
    double mu = 0;
    for (int m = 1; m <= cfg.depth; m++) {
        std::vector<Node> next;
        for (const auto &node : level) {
            for (size_t j = 0; j < chars.size(); j++) {
                auto dom = dominate_character(chars[j], node.psi, omega, false);
                double w = node.weight * std::pow(N, -sigma[j] / 16.0);
                next.push_back({dom.dominator, w});
            }
        }
        for (const auto &node : next) {
            mu += node.weight;
            for (const auto &[a, w] : node.psi.weights()) dmap[a] += node.weight * w;
        }
        level = std::move(next);
        if (level.empty()) break;
    }
    rep.mu = mu;
    double s1 = 0;
    for (double s : sigma) s1 += std::pow(N, -s / 16.0);
    rep.residual_mass = (s1 < 1.0 && cfg.depth >= 0)
                            ? std::pow(s1, cfg.depth + 1) / (1.0 - s1)
                            : std::numeric_limits<double>::infinity();

    for (auto &[a, w] : dmap) w /= (1.0 + mu);
    DampingCombination draw(std::move(dmap), {});
    rep.D = draw.real_part();
    rep.alpha_constant = rep.D.weight_of(PhiAtom{1, 0});

    if (cfg.run_checks) {
        // The completed products must reach every conductor in play, or the
        // local factors at the conductor primes go missing from the plain side.
        i64 T = cfg.check_prime_cutoff;
        for (const auto &z : rs) T = std::max(T, z.conductor);
        i64 rad = 1;
        for (i64 p : primes_upto(T)) rad *= p;
        i64 q1 = cfg.exceptional ? rs[0].conductor : 1;
        for (size_t j = 0; j < rs.size(); j++) {
            DirichletCharacter chi = resolve(rs[j]);
            bool with_e = cfg.exceptional && j == 0;
            i64 divisor = with_e ? q1 : 1;
            i64 period = lcm(lcm(rad, chi.modulus()), rep.D.period());
            if (divisor > 1) period = lcm(period, divisor);
            double scale = std::pow(N, -rs[j].sigma() / 8.0);
            auto lhs_vals = assembled_values(
                period, scale,
                [&](i64 n) { return char_completed_value(chi, static_cast<double>(T), n); }, T,
                rep.D, divisor);
            auto rhs_vals = assembled_values(
                period, 1.0,
                [&](i64 n) {
                    return std::complex<double>(
                        lambda_completed_value(static_cast<double>(T), n).get_d(), 0.0);
                },
                T, rep.D, divisor);
            auto lhat = period >= 512 ? dft_parallel(lhs_vals) : dft_serial(lhs_vals);
            auto rhat = period >= 512 ? dft_parallel(rhs_vals) : dft_serial(rhs_vals);
            bool ok = true;
            double worst = 0;
            for (i64 k = 0; k < period; k++) {
                double lv = std::abs(lhat[static_cast<size_t>(k)]);
                double rv = rhat[static_cast<size_t>(k)].real();
                double slack = rv + 1e-9 - lv;
                if (slack < worst) worst = slack;
                if (slack < 0) ok = false;
            }
            rep.checks.push_back({j + 1, with_e, ok, worst});
        }
    }
    return rep;
}

} // namespace vdc
