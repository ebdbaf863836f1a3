// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Usage: acceptance [--cli <path-to-loopcalc-binary>]

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "loopcalc/dlops.hpp"
#include "loopcalc/expr.hpp"
#include "loopcalc/hopf.hpp"
#include "loopcalc/maps.hpp"
#include "loopcalc/replication.hpp"
#include "loopcalc/sieve.hpp"
#include "loopcalc/steenrod.hpp"

using namespace loopcalc;

namespace {

int g_failures = 0;
std::string g_cli;

struct Criterion {
    const char* name;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string why;

    explicit Criterion(const char* n) : name(n) {}

    void require(bool cond, const std::string& detail) {
        if (!cond && ok) {
            ok = false;
            why = detail;
        }
    }

    ~Criterion() {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        if (ok) {
            std::printf("[PASS] %s (%lld ms)\n", name, static_cast<long long>(elapsed));
        } else {
            std::printf("[FAIL] %s (%lld ms): %s\n", name, static_cast<long long>(elapsed),
                        why.c_str());
            ++g_failures;
        }
        std::fflush(stdout);
    }
};

std::set<std::string> names(const std::vector<Element>& es) {
    std::set<std::string> out;
    for (const auto& e : es) out.insert(to_string(e));
    return out;
}

// 1. Replication suite: every cataloged identity, exactly, in under 10 s.
void criterion1() {
    Criterion c("criterion 1: replication suite, exact, < 10 s");
    const auto t0 = std::chrono::steady_clock::now();
    const ReplicationReport report = run_replication("");
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    for (const auto& r : report.results)
        c.require(r.pass, "case " + r.id + ": " + r.detail);
    c.require(report.matched >= 70, "catalog unexpectedly small");
    c.require(ms < 10'000, "replication took " + std::to_string(ms) + " ms");
}

// 2. wellington_check == direct annihilation sweep for every admissible
//    (I, i) with length(I) <= 3 and total dimension <= 36, in under 5 min.
//    Words whose class normalizes to zero are excluded: annihilation is
//    vacuous there, so the criterion has nothing to say about them.
void criterion2() {
    Criterion c("criterion 2: Curtis/Wellington criterion vs direct sweep, dim <= 36");
    const auto t0 = std::chrono::steady_clock::now();
    const auto q0 = SpaceContext::q0s0();
    long long words = 0, nonzero = 0;

    OpSequence w;
    auto sweep = [&](auto&& self, int rem, std::size_t want) -> void {
        if (!c.ok) return;
        if (w.size() == want) {
            ++words;
            const Element e = detail::eval_word(w, Generator::zeta(w.back()), q0);
            if (e.is_zero()) return;
            ++nonzero;
            const OpSequence I(w.begin(), w.end() - 1);
            const bool closed = wellington_check(I, w.back());
            const bool direct = annihilated_by_all_sq(e);
            if (closed != direct) {
                std::string msg = "witness I=(";
                for (std::size_t k = 0; k < I.size(); ++k)
                    msg += (k ? "," : "") + std::to_string(I[k]);
                msg += "), i=" + std::to_string(w.back()) + ": criterion=" +
                       (closed ? "true" : "false") + " direct=" + (direct ? "true" : "false") +
                       " on " + to_string(e);
                std::printf("  %s\n", msg.c_str());
                c.require(false, msg);
            }
            return;
        }
        const int slots_left = static_cast<int>(want - w.size()) - 1;
        for (int v = 1; v + slots_left <= rem; ++v) {
            if (!w.empty() && w.back() > 2 * v) continue;
            w.push_back(v);
            self(self, rem - v, want);
            w.pop_back();
        }
    };
    for (std::size_t len = 2; len <= 4; ++len) sweep(sweep, 36, len);
    c.require(words > 15'000,
              "admissible sweep unexpectedly small: " + std::to_string(words));
    c.require(nonzero >= 240,
              "nonzero-class cases unexpectedly few: " + std::to_string(nonzero));
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    c.require(ms < 300'000, "sweep took " + std::to_string(ms) + " ms");
}

// 3. Adem confluence on 1000 seeded words plus the Cartan square oracle on
//    200 seeded pairs.
void criterion3() {
    Criterion c("criterion 3: Adem confluence (1000 words) + Cartan oracle (200 pairs)");
    std::mt19937_64 rng(0xADE3);
    std::uniform_int_distribution<int> len(1, 4), idx(1, 24), pickgen(1, 6);
    for (int trial = 0; trial < 1000; ++trial) {
        OpSequence word(static_cast<std::size_t>(len(rng)));
        for (auto& w : word) w = idx(rng);
        const Generator g = Generator::sphere(pickgen(rng));
        const auto sp = SpaceContext::qsphere(g.a);
        const Element direct = adem_normalize(word, g, sp);
        const Element ltr = adem_normalize_word_order(word, g, sp, ScanOrder::LeftToRight);
        const Element rtl = adem_normalize_word_order(word, g, sp, ScanOrder::RightToLeft);
        if (direct != ltr || ltr != rtl) {
            std::string w = "word over x" + std::to_string(g.a) + ":";
            for (int v : word) w += " " + std::to_string(v);
            c.require(false, w);
            return;
        }
    }
    std::uniform_int_distribution<int> amax(0, 24);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = pickgen(rng);
        const auto sp = SpaceContext::qsphere(n);
        const auto gens = algebra_generators(sp, 12);
        const GenMonomial& u = gens[static_cast<std::size_t>(rng() % gens.size())];
        const int a = amax(rng);
        const Element usq(sp, Monomial::single(u, 2));
        const Element ue(sp, Monomial::single(u));
        Element split(sp);
        for (int i = 0; i <= a; ++i)
            split.add_in_place(multiply(apply_Q(i, ue), apply_Q(a - i, ue)));
        if (apply_Q(a, usq) != split) {
            c.require(false, "Cartan oracle diverged on Q^" + std::to_string(a) + " (" +
                                 to_string(u) + ")^2");
            return;
        }
    }
}

// 4. Hopf checks: coassociativity + counit (dim <= 16), Sq-coproduct Cartan
//    compatibility (dim <= 12), Milnor-Moore squares (dim <= 20).
void criterion4() {
    Criterion c("criterion 4: Hopf coassociativity/counit, Sq compatibility, Milnor-Moore");
    const std::array<SpaceContext, 3> spaces = {
        SpaceContext::qsphere(1), SpaceContext::qsphere(2), SpaceContext::q0s0()};

    using Triple = std::tuple<Monomial, Monomial, Monomial>;
    for (const auto& sp : spaces) {
        for (int d = 1; d <= 16 && c.ok; ++d) {
            for (const auto& m : enumerate_basis(sp, d)) {
                const TensorElement t = coproduct(m, sp);
                std::set<Triple> left, right;
                for (const auto& [u, v] : t.pairs()) {
                    const TensorElement tu = coproduct(u, sp);
                    for (const auto& [a, b] : tu.pairs()) {
                        auto [it, ins] = left.insert({a, b, v});
                        if (!ins) left.erase(it);
                    }
                    const TensorElement tv = coproduct(v, sp);
                    for (const auto& [a, b] : tv.pairs()) {
                        auto [it, ins] = right.insert({u, a, b});
                        if (!ins) right.erase(it);
                    }
                }
                if (left != right) {
                    c.require(false, "coassociativity fails on " + to_string(m) + " in " +
                                         sp.name());
                    break;
                }
                Element counit(sp);
                for (const auto& [u, v] : t.pairs())
                    if (u.is_unit()) counit.toggle(v);
                if (!(counit == Element(sp, m))) {
                    c.require(false, "counit fails on " + to_string(m) + " in " + sp.name());
                    break;
                }
            }
        }
        for (int d = 1; d <= 12 && c.ok; ++d) {
            for (const auto& m : enumerate_basis(sp, d)) {
                const TensorElement psi_m = coproduct(m, sp);
                for (int r = 1; r <= d; ++r) {
                    const TensorElement lhs = coproduct(sq_down(r, Element(sp, m)));
                    TensorElement rhs(sp);
                    for (const auto& [u, v] : psi_m.pairs()) {
                        for (int i = 0; i <= r; ++i) {
                            const Element su =
                                i == 0 ? Element(sp, u) : sq_down(i, Element(sp, u));
                            if (su.is_zero()) continue;
                            const Element sv =
                                r - i == 0 ? Element(sp, v) : sq_down(r - i, Element(sp, v));
                            if (sv.is_zero()) continue;
                            for (const auto& mu : su.terms())
                                for (const auto& mv : sv.terms()) rhs.toggle(mu, mv);
                        }
                    }
                    if (!(lhs == rhs)) {
                        c.require(false, "Sq-coproduct compatibility fails on Sq^" +
                                             std::to_string(r) + " " + to_string(m) + " in " +
                                             sp.name());
                        break;
                    }
                }
                if (!c.ok) break;
            }
        }
        for (int d = 2; d <= 20 && c.ok; d += 2) {
            std::vector<Element> dec;
            for (const auto& m : enumerate_basis(sp, d))
                if (m.decomposable()) dec.emplace_back(sp, m);
            if (dec.empty()) continue;
            std::vector<TensorElement> reduced;
            for (const auto& e : dec) {
                TensorElement t = coproduct(e);
                for (const auto& m : e.terms()) {
                    t.toggle(m, Monomial::unit());
                    t.toggle(Monomial::unit(), m);
                }
                reduced.push_back(std::move(t));
            }
            for (const auto& p : solve_f2_tensor(dec, reduced))
                for (const auto& m : p.terms())
                    if (!square_root(m))
                        c.require(false, "primitive decomposable " + to_string(p) + " in " +
                                             sp.name() + " dim " + std::to_string(d) +
                                             " is not a square");
        }
    }
}

// 5. Structure maps: suspension kills decomposables (dim <= 24) and shifts
//    dimension by one; stabilization embeds bases injectively (a <= 3,
//    b <= 9, dim <= 20).
void criterion5() {
    Criterion c("criterion 5: suspension kills decomposables; stabilization injective");
    const std::vector<SpaceContext> sources = {
        SpaceContext::qsphere(1), SpaceContext::qsphere(2), SpaceContext::qsphere(4),
        SpaceContext::q0s0(), SpaceContext::loop_sphere(2, 10),
        SpaceContext::loop_sphere(3, 11), SpaceContext::loop_sphere(3, 7)};
    for (const auto& sp : sources) {
        for (int d = 1; d <= 24 && c.ok; ++d) {
            for (const auto& m : enumerate_basis(sp, d)) {
                const auto [img, target] = suspend(Element(sp, m));
                if (m.decomposable()) {
                    if (!img.is_zero()) {
                        c.require(false, "suspension kept decomposable " + to_string(m) +
                                             " in " + sp.name());
                        break;
                    }
                } else if (!img.is_zero()) {
                    if (img.dimension() != std::optional<int>(d + 1)) {
                        c.require(false, "suspension dimension shift wrong on " +
                                             to_string(m) + " in " + sp.name());
                        break;
                    }
                    for (const auto& mm : img.terms())
                        if (!target.admits(mm))
                            c.require(false, "suspension image out of model: " +
                                                 to_string(mm));
                }
            }
        }
    }
    for (int a = 1; a <= 3 && c.ok; ++a) {
        for (int b = a + 1; b <= 9; ++b) {
            const auto loop = SpaceContext::loop_sphere(a, b);
            const auto stable = SpaceContext::qsphere(b - a);
            for (int d = 1; d <= 20; ++d) {
                const auto basis = enumerate_basis(loop, d);
                std::set<Monomial> images;
                for (const auto& m : basis) {
                    const Element img = stabilize(Element(loop, m));
                    if (img.size() != 1 || !stable.admits(*img.terms().begin())) {
                        c.require(false, "stabilization broke basis class " + to_string(m));
                        break;
                    }
                    images.insert(*img.terms().begin());
                }
                if (images.size() != basis.size())
                    c.require(false, "stabilization collision in " + loop.name() + " dim " +
                                         std::to_string(d));
            }
        }
    }
}

// 6. Sieve reproductions: (a) LoopSphere(2,10) dims 9..34, (b)
//    LoopSphere(3,11) dims 9..58 with the weight-4 square rejected by Sq^4,
//    (c) QSphere(7) dim 14; exact set equality, in under 3 min.
void criterion6() {
    Criterion c("criterion 6: sieve desk-scale reproductions, < 3 min");
    const auto t0 = std::chrono::steady_clock::now();

    const auto l2s10 = SpaceContext::loop_sphere(2, 10);
    std::set<std::string> found;
    for (int d = 9; d <= 34; ++d)
        for (const auto& e : square_root_filter(spherical_candidates(l2s10, d)))
            found.insert(to_string(e) + " @" + std::to_string(d));
    c.require(found == std::set<std::string>{"Q[9]x8^2 @34"},
              "LoopSphere(2,10) square-filtered list differs");

    const auto l3s11 = SpaceContext::loop_sphere(3, 11);
    const std::set<std::string> allowed = {"Q[19,10]x8^2", "Q[9]x8^2"}; // forms (i) and (ii)
    std::set<std::string> got;
    for (int d = 9; d <= 58; ++d)
        for (const auto& e : square_root_filter(spherical_candidates(l3s11, d))) {
            got.insert(to_string(e));
            if (!allowed.count(to_string(e)))
                c.require(false, "unexpected LoopSphere(3,11) survivor " + to_string(e) +
                                     " in dim " + std::to_string(d));
        }
    c.require(got == std::set<std::string>{"Q[9]x8^2"},
              "LoopSphere(3,11) square-filtered list differs");
    // form (i) is rejected by Sq^4: its Sq^4 image is the square of the
    // shifted word, hence nonzero
    const Element form1(l3s11,
                        Monomial::single(GenMonomial{{19, 10}, Generator::sphere(8)}, 2));
    const Element sq4 = sq_down(4, form1);
    c.require(!sq4.is_zero() && to_string(sq4) == "Q[18,9]x8^2",
              "Sq^4 rejection of the weight-4 square failed");

    c.require(names(spherical_candidates(SpaceContext::qsphere(7), 14)) ==
                  std::set<std::string>{"x7^2"},
              "QSphere(7) dim 14 candidates differ");
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    c.require(ms < 180'000, "sieve took " + std::to_string(ms) + " ms");
}

#ifdef _WIN32
#error "the acceptance harness assumes a POSIX popen"
#endif

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    CliResult res;
    const std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

// 7. CLI contract: parser round-trip on all basis monomials of dim <= 20 in
//    the four context kinds, byte-stable JSON, exit codes 0/1/2.
void criterion7() {
    Criterion c("criterion 7: CLI round-trip, byte-stable JSON, exit codes");
    const std::vector<SpaceContext> spaces = {
        SpaceContext::qsphere(1), SpaceContext::qsphere(8), SpaceContext::q0s0(),
        SpaceContext::loop_sphere(2, 10), SpaceContext::loop_sphere(3, 11),
        SpaceContext::qstunted(1), SpaceContext::qstunted(2)};
    for (const auto& sp : spaces) {
        for (int d = 1; d <= 20 && c.ok; ++d) {
            for (const auto& m : enumerate_basis(sp, d)) {
                const Element e(sp, m);
                Element back(sp);
                try {
                    back = parse_expr(to_string(e), sp);
                } catch (const std::exception& ex) {
                    c.require(false, "round-trip parse failed on " + to_string(e) + ": " +
                                         ex.what());
                    break;
                }
                if (!(back == e)) {
                    c.require(false, "round-trip mismatch on " + to_string(e) + " in " +
                                         sp.name());
                    break;
                }
            }
        }
    }

    if (g_cli.empty()) {
        c.require(false, "no --cli path provided");
        return;
    }
    const CliResult a = run_cli("basis --space Q0S0 --dim 12 --format json");
    const CliResult b = run_cli("basis --space Q0S0 --dim 12 --format json");
    c.require(a.exit_code == 0 && a.out == b.out && !a.out.empty(),
              "basis JSON not byte-stable across runs");
    const CliResult sq = run_cli("sq --space QS8 --expr \"Q[19,10]x8\" --r 2 --format json");
    const CliResult sq2 = run_cli("sq --space QS8 --expr \"Q[19,10]x8\" --r 2 --format json");
    c.require(sq.exit_code == 0 && sq.out == sq2.out, "sq JSON not byte-stable");
    c.require(sq.out.find("Q[18,9]x8") != std::string::npos, "sq output wrong");

    c.require(run_cli("verify --filter tripleloop5-sq4").exit_code == 0,
              "verify tripleloop5-sq4 should exit 0");
    c.require(run_cli("verify --filter no-such-case").exit_code == 2,
              "unknown case id should exit 2");
    c.require(run_cli("sq --space QS8 --expr \"Q[9x8\" --r 1").exit_code == 2,
              "syntax error should exit 2");
    c.require(run_cli("sq --space QS8 --expr \"z2\" --r 1").exit_code == 2,
              "context mismatch should exit 2");
    c.require(run_cli("frobnicate").exit_code == 2, "unknown subcommand should exit 2");
    c.require(run_cli("sq --space QS8 --expr \"x8 + Q[9]x8\" --r 1").exit_code == 1,
              "inhomogeneous operand should exit 1");
    const CliResult fuel = run_cli("sq --space QS8 --expr \"(Q[19,10]x8)^2\" --r 4");
    c.require(fuel.exit_code == 0, "baseline sq run failed");
    const std::string saved = g_cli;
    g_cli = "LOOPCALC_FUEL=5 " + saved;
    c.require(run_cli("sq --space QS8 --expr \"(Q[19,10]x8)^2\" --r 4").exit_code == 1,
              "fuel exhaustion should exit 1");
    g_cli = saved;
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc + 1; ++i) {
        if (std::string(argv[i]) == "--cli" && i + 1 < argc) g_cli = argv[i + 1];
    }
    const auto t0 = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    const auto total = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    std::printf("%s: %d/7 criteria passed (%lld ms total)\n",
                g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED", 7 - g_failures,
                static_cast<long long>(total));
    return g_failures == 0 ? 0 : 1;
}
