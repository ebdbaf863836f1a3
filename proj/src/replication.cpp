#include "loopcalc/replication.hpp"

#include <random>

#include "loopcalc/dlops.hpp"
#include "loopcalc/expr.hpp"
#include "loopcalc/maps.hpp"
#include "loopcalc/mod2.hpp"
#include "loopcalc/steenrod.hpp"

namespace loopcalc {

namespace {

Element single(const SpaceContext& sp, GenMonomial gm, int exp = 1) {
    return Element(sp, Monomial::single(std::move(gm), exp));
}

CaseResult check_equal(const std::string& id, const Element& got, const Element& want,
                       bool require_nonzero = false) {
    CaseResult r{id, got == want && (!require_nonzero || !got.is_zero()), {}, {}};
    r.detail = "computed " + to_string(got) + ", expected " + to_string(want);
    return r;
}

OpSequence chain_word(int n, int t) {
    OpSequence w;
    for (int k = t - 1; k >= 0; --k) w.push_back((1 << k) * n);
    return w;
}

// ---- case families ----

void add_sq1_special(std::vector<ReplicationCase>& cat) {
    cat.push_back({"sq1-special",
                   "Sq^1 Q^{2d} z = Q^{2d-1} z and Sq^1 Q^{2t+1} z = 0 on basis generators",
                   [] {
                       const std::vector<SpaceContext> spaces = {
                           SpaceContext::qsphere(1), SpaceContext::qsphere(2),
                           SpaceContext::qsphere(3), SpaceContext::q0s0(),
                           SpaceContext::qstunted(1)};
                       long long checked = 0;
                       for (const auto& sp : spaces) {
                           for (const auto& gm : algebra_generators(sp, 30)) {
                               if (gm.ops.empty()) continue;
                               const Element got = sq_down(1, single(sp, gm));
                               Element want(sp);
                               if (gm.ops.front() % 2 == 0) {
                                   OpSequence w = gm.word();
                                   w.front() -= 1;
                                   want = detail::eval_word(w, gm.gen, sp);
                               }
                               ++checked;
                               if (got != want) {
                                   CaseResult r{"sq1-special", false, {}, {}};
                                   r.detail = "failed on " + to_string(gm) + " in " +
                                              sp.name() + ": got " + to_string(got);
                                   throw r;
                               }
                           }
                       }
                       return CaseResult{"sq1-special", true,
                                         std::to_string(checked) +
                                             " generator cases verified",
                                         {}};
                   }});
}

void add_singleloop(std::vector<ReplicationCase>& cat) {
    for (int n = 1; n <= 10; ++n) {
        for (int t = 1; t <= 3; ++t) {
            const std::string id =
                "singleloop-chain-n" + std::to_string(n) + "-t" + std::to_string(t);
            cat.push_back(
                {id, "x_n^{2^t} = Q^{2^{t-1}n} ... Q^{2n} Q^n x_n", [id, n, t] {
                     const auto sp = SpaceContext::qsphere(n);
                     Element e = single(sp, GenMonomial{{}, Generator::sphere(n)});
                     const OpSequence w = chain_word(n, t);
                     for (std::size_t k = w.size(); k-- > 0;) e = apply_Q(w[k], e);
                     const Element want(
                         sp, Monomial::single(GenMonomial{{}, Generator::sphere(n)}, 1 << t));
                     return check_equal(id, e, want, true);
                 }});
        }
    }
    // Sq^1 drops the even leading entry of the chain over x_{n-1} to a square.
    for (int n : {8, 9, 10}) {
        for (int t : {2, 3}) {
            const std::string id =
                "singleloop-sq1-n" + std::to_string(n) + "-t" + std::to_string(t);
            cat.push_back(
                {id, "Sq^1 Q^{2^{t-1}n}...Q^n x_{n-1} = (Q^{2^{t-2}n}...Q^n x_{n-1})^2",
                 [id, n, t] {
                     const auto sp = SpaceContext::qsphere(n - 1);
                     const Element got = sq_down(
                         1, single(sp, GenMonomial{chain_word(n, t), Generator::sphere(n - 1)}));
                     const Element want(
                         sp, Monomial::single(
                                 GenMonomial{chain_word(n, t - 1), Generator::sphere(n - 1)}, 2));
                     return check_equal(id, got, want, true);
                 }});
        }
    }
}

void add_doubleloop(std::vector<ReplicationCase>& cat) {
    for (int n = 1; n <= 10; ++n) {
        for (int t = 1; t <= 4; ++t) {
            const std::string id =
                "doubleloop1-conv-n" + std::to_string(n) + "-t" + std::to_string(t);
            cat.push_back(
                {id, "Q_1...Q_1 x_n (t times) = Q^{2^{t-1}(n+1)} ... Q^{2n+2} Q^{n+1} x_n",
                 [id, n, t] {
                     const auto sp = SpaceContext::qsphere(n);
                     const Element got = convert_lower_to_upper(
                         std::vector<int>(t, 1), Generator::sphere(n), sp);
                     OpSequence w;
                     for (int k = t - 1; k >= 0; --k) w.push_back((1 << k) * (n + 1));
                     const Element want = single(sp, GenMonomial{w, Generator::sphere(n)});
                     return check_equal(id, got, want, true);
                 }});
        }
    }
    for (int n : {7, 9}) {
        const std::string id = "doubleloop1-sq2-n" + std::to_string(n);
        cat.push_back({id, "Sq^2 (Q^{n+1} x_n)^2 = (Q^n x_n)^2 = x_n^4 for odd n", [id, n] {
                           const auto sp = SpaceContext::qsphere(n);
                           const Element got = sq_down(
                               2, single(sp, GenMonomial{{n + 1}, Generator::sphere(n)}, 2));
                           const Element want(
                               sp, Monomial::single(GenMonomial{{}, Generator::sphere(n)}, 4));
                           return check_equal(id, got, want, true);
                       }});
    }
    for (int n : {8, 10}) {
        const std::string top = "doubleloop2-j2-top-n" + std::to_string(n);
        cat.push_back(
            {top, "j_2 (Q^{n+1} x_{n+1}) = Sigma^{n+1} a_{n+1}", [top, n] {
                 const auto sp = SpaceContext::qsphere(n + 1);
                 Element e = single(sp, GenMonomial{{}, Generator::sphere(n + 1)});
                 e = apply_Q(n + 1, e); // the square x_{n+1}^2
                 const J2Result j2 = j2_project(e, J2Mode::Exact);
                 const Element want(
                     SpaceContext::qstunted(n + 1),
                     Monomial::single(GenMonomial{{}, Generator::stunted(n + 1, n + 1)}));
                 CaseResult r = check_equal(top, j2.image, want, true);
                 r.pass = r.pass && j2.exact;
                 return r;
             }});
        const std::string sq = "doubleloop2-j2-sq-n" + std::to_string(n);
        cat.push_back(
            {sq, "j_2 (Q^{n+1} x_n)^2 = (Sigma^n a_{n+1})^2", [sq, n] {
                 const auto sp = SpaceContext::qsphere(n);
                 const Element e = single(sp, GenMonomial{{n + 1}, Generator::sphere(n)}, 2);
                 const J2Result j2 = j2_project(e, J2Mode::Exact);
                 const Element want(
                     SpaceContext::qstunted(n),
                     Monomial::single(GenMonomial{{}, Generator::stunted(n, n + 1)}, 2));
                 CaseResult r = check_equal(sq, j2.image, want, true);
                 r.pass = r.pass && j2.exact;
                 return r;
             }});
    }
}

void add_tripleloop(std::vector<ReplicationCase>& cat) {
    for (int n = 1; n <= 10; ++n) {
        const std::string id = "tripleloop1-conv-n" + std::to_string(n);
        cat.push_back(
            {id, "Q_1 Q_2 x_n = Q^{2n+3} Q^{n+2} x_n; Q_1 x_n = Q^{n+1} x_n; Q_2 x_n = Q^{n+2} x_n",
             [id, n] {
                 const auto sp = SpaceContext::qsphere(n);
                 const Generator g = Generator::sphere(n);
                 const bool ok =
                     convert_lower_to_upper({1, 2}, g, sp) ==
                         single(sp, GenMonomial{{2 * n + 3, n + 2}, g}) &&
                     convert_lower_to_upper({1}, g, sp) ==
                         single(sp, GenMonomial{{n + 1}, g}) &&
                     convert_lower_to_upper({2}, g, sp) ==
                         single(sp, GenMonomial{{n + 2}, g});
                 return CaseResult{id, ok,
                                   "lower (1,2) -> " +
                                       to_string(convert_lower_to_upper({1, 2}, g, sp)),
                                   {}};
             }});
    }
    cat.push_back(
        {"tripleloop1-seq-note",
         "iterated Q_2 conversion doubles n+2: Q_2 Q_2 x_n = Q^{2(n+2)} Q^{n+2} x_n",
         [] {
             const int n = 8;
             const auto sp = SpaceContext::qsphere(n);
             const Generator g = Generator::sphere(n);
             const Element got = convert_lower_to_upper({2, 2}, g, sp);
             const Element want = single(sp, GenMonomial{{2 * n + 4, n + 2}, g});
             CaseResult r = check_equal("tripleloop1-seq-note", got, want, true);
             r.note = "the second-innermost upper index of a Q_2 chain is 2(n+2), not "
                      "2(n+1); displays using 2(n+1) in this slot disagree with the "
                      "index arithmetic";
             return r;
         }});
    for (int n : {6, 8, 10}) {
        const std::string id2 = "tripleloop5-sq2-n" + std::to_string(n);
        cat.push_back({id2, "Sq^2 Q^{2n+3} Q^{n+2} x_n = Q^{2n+2} Q^{n+1} x_n", [id2, n] {
                           const auto sp = SpaceContext::qsphere(n);
                           const Element got = sq_down(
                               2, single(sp, GenMonomial{{2 * n + 3, n + 2},
                                                         Generator::sphere(n)}));
                           const Element want = single(
                               sp, GenMonomial{{2 * n + 2, n + 1}, Generator::sphere(n)});
                           return check_equal(id2, got, want, true);
                       }});
        const std::string id4 = "tripleloop5-sq4-n" + std::to_string(n);
        cat.push_back({id4, "Sq^4 (Q^{2n+3} Q^{n+2} x_n)^2 = (Q^{2n+2} Q^{n+1} x_n)^2 != 0",
                       [id4, n] {
                           const auto sp = SpaceContext::qsphere(n);
                           const Element got = sq_down(
                               4, single(sp, GenMonomial{{2 * n + 3, n + 2},
                                                         Generator::sphere(n)},
                                         2));
                           const Element want(
                               sp, Monomial::single(GenMonomial{{2 * n + 2, n + 1},
                                                                Generator::sphere(n)},
                                                    2));
                           return check_equal(id4, got, want, true);
                       }});
    }
    for (int t : {3, 4, 5}) {
        const std::string idr = "tripleloop3-rho-t" + std::to_string(t);
        cat.push_back({idr, "rho(4n+5) = rho(2n+3) = 1 when n+2 = 2^t - 1", [idr, t] {
                           const int n = (1 << t) - 3;
                           const bool ok = rho(4 * n + 5) == 1 && rho(2 * n + 3) == 1;
                           return CaseResult{idr, ok,
                                             "n = " + std::to_string(n) + ": rho(" +
                                                 std::to_string(4 * n + 5) + ") = " +
                                                 std::to_string(rho(4 * n + 5)) + ", rho(" +
                                                 std::to_string(2 * n + 3) + ") = " +
                                                 std::to_string(rho(2 * n + 3)),
                                             {}};
                       }});
        const std::string idc = "tripleloop3-claim2-t" + std::to_string(t);
        cat.push_back(
            {idc, "Sq^2 Q^{4n+5} Q^{2n+3} Q^{n+2} x_{n-2} = (Q^{2n+3} Q^{n+2} x_{n-2})^2",
             [idc, t] {
                 const int n = (1 << t) - 3;
                 const auto sp = SpaceContext::qsphere(n - 2);
                 const Generator g = Generator::sphere(n - 2);
                 const Element got =
                     sq_down(2, single(sp, GenMonomial{{4 * n + 5, 2 * n + 3, n + 2}, g}));
                 const Element want(
                     sp, Monomial::single(GenMonomial{{2 * n + 3, n + 2}, g}, 2));
                 return check_equal(idc, got, want, true);
             }});
    }
    cat.push_back(
        {"tripleloop3-lead-n10",
         "Sq^{2^{rho+2}} Q^{4n+5} Q^{2n+3} Sigma a_{n+2} contains "
         "Q^{4n+5-2^{rho+1}} Q^{2n+3-2^rho} Sigma a_{n+2-2^rho} (n = 10, rho = rho(12) = 0)",
         [] {
             const int n = 10;
             const int r = rho(n + 2); // 0
             const auto sp = SpaceContext::qstunted(1);
             const Element got = sq_down(
                 1 << (r + 2),
                 single(sp, GenMonomial{{4 * n + 5, 2 * n + 3}, Generator::stunted(1, n + 2)}));
             const Monomial lead = Monomial::single(
                 GenMonomial{{4 * n + 5 - (1 << (r + 1)), 2 * n + 3 - (1 << r)},
                             Generator::stunted(1, n + 2 - (1 << r))});
             const bool ok = got.terms().count(lead) > 0;
             return CaseResult{"tripleloop3-lead-n10", ok,
                               "computed " + to_string(got) + ", leading term " +
                                   to_string(lead),
                               {}};
         }});
}

void add_zeta_and_stab(std::vector<ReplicationCase>& cat) {
    cat.push_back(
        {"zeta-susp", "sigma_* Q^I zeta_i = Q^I Q^i x_1 on all zeta generators of dim <= 20",
         [] {
             const auto q0 = SpaceContext::q0s0();
             const auto qs1 = SpaceContext::qsphere(1);
             long long checked = 0;
             for (const auto& gm : algebra_generators(q0, 20)) {
                 const auto [image, target] = suspend(single(q0, gm));
                 const Element want = adem_normalize_word_order(
                     gm.word(), Generator::sphere(1), qs1, ScanOrder::LeftToRight);
                 ++checked;
                 if (target != qs1 || image != want || image.is_zero() ||
                     image.dimension() != std::optional<int>(gm.dimension() + 1)) {
                     CaseResult r{"zeta-susp", false, {}, {}};
                     r.detail = "failed on " + to_string(gm) + ": got " + to_string(image) +
                                ", expected " + to_string(want);
                     throw r;
                 }
             }
             return CaseResult{"zeta-susp", true,
                               std::to_string(checked) + " zeta generators verified", {}};
         }});
    cat.push_back(
        {"stab-inject",
         "stabilization embeds the LoopSphere bases into the QSphere bases injectively "
         "(a <= 3, b <= 9, dim <= 20)",
         [] {
             long long checked = 0;
             for (int a = 1; a <= 3; ++a) {
                 for (int b = a + 1; b <= 9; ++b) {
                     const auto loop = SpaceContext::loop_sphere(a, b);
                     const auto target = SpaceContext::qsphere(b - a);
                     for (int d = 1; d <= 20; ++d) {
                         std::set<Monomial> images;
                         const auto basis = enumerate_basis(loop, d);
                         for (const auto& m : basis) {
                             const Element img = stabilize(Element(loop, m));
                             if (img.size() != 1 || !target.admits(*img.terms().begin()))
                                 throw CaseResult{"stab-inject", false,
                                                  "non-basis image of " + to_string(m), {}};
                             images.insert(*img.terms().begin());
                         }
                         if (images.size() != basis.size())
                             throw CaseResult{"stab-inject", false,
                                              "collision in " + loop.name() + " dim " +
                                                  std::to_string(d),
                                              {}};
                         checked += static_cast<long long>(basis.size());
                     }
                 }
             }
             return CaseResult{"stab-inject", true,
                               std::to_string(checked) + " basis classes verified", {}};
         }});
}

void add_property_cases(std::vector<ReplicationCase>& cat, const ReplicationOptions& opts) {
    const std::uint64_t seed = opts.seed;
    cat.push_back(
        {"adem-confluence",
         "1000 random op words (length <= 4, indices <= 24) over x_1..x_6 normalize "
         "identically under direct, left-to-right, and right-to-left rewriting",
         [seed] {
             std::mt19937_64 rng(seed);
             std::uniform_int_distribution<int> len(1, 4), idx(1, 24), gen(1, 6);
             for (int trial = 0; trial < 1000; ++trial) {
                 OpSequence word(static_cast<std::size_t>(len(rng)));
                 for (auto& w : word) w = idx(rng);
                 const Generator g = Generator::sphere(gen(rng));
                 const auto sp = SpaceContext::qsphere(g.a);
                 const Element direct = adem_normalize(word, g, sp);
                 const Element left =
                     adem_normalize_word_order(word, g, sp, ScanOrder::LeftToRight);
                 const Element right =
                     adem_normalize_word_order(word, g, sp, ScanOrder::RightToLeft);
                 if (direct != left || left != right) {
                     CaseResult r{"adem-confluence", false, {}, {}};
                     r.detail = "diverged on word over x" + std::to_string(g.a);
                     for (int w : word) r.detail += " " + std::to_string(w);
                     return r;
                 }
             }
             return CaseResult{"adem-confluence", true, "1000 words confluent", {}};
         }});
    cat.push_back(
        {"cartan-square",
         "apply_Q(a, u^2) equals the full Cartan splitting sum over 200 random pairs",
         [seed] {
             std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
             std::uniform_int_distribution<int> gen(1, 4), pick(0, 1 << 30);
             for (int trial = 0; trial < 200; ++trial) {
                 const int n = gen(rng);
                 const auto sp = SpaceContext::qsphere(n);
                 const auto gens = algebra_generators(sp, 10);
                 const GenMonomial& u = gens[pick(rng) % gens.size()];
                 const int a = pick(rng) % 25;
                 const Element usq(sp, Monomial::single(u, 2));
                 const Element got = apply_Q(a, usq);
                 Element want(sp);
                 const Element ue = single(sp, u);
                 for (int i = 0; i <= a; ++i)
                     want.add_in_place(multiply(apply_Q(i, ue), apply_Q(a - i, ue)));
                 if (got != want) {
                     CaseResult r{"cartan-square", false, {}, {}};
                     r.detail = "diverged on Q^" + std::to_string(a) + " (" + to_string(u) +
                                ")^2";
                     return r;
                 }
             }
             return CaseResult{"cartan-square", true, "200 splittings verified", {}};
         }});
}

} // namespace

std::vector<ReplicationCase> replication_catalog(const ReplicationOptions& opts) {
    std::vector<ReplicationCase> cat;
    add_sq1_special(cat);
    add_singleloop(cat);
    add_doubleloop(cat);
    add_tripleloop(cat);
    add_zeta_and_stab(cat);
    add_property_cases(cat, opts);
    return cat;
}

ReplicationReport run_replication(std::string_view filter, const ReplicationOptions& opts) {
    ReplicationReport report;
    for (const auto& c : replication_catalog(opts)) {
        if (!filter.empty() && c.id.rfind(filter, 0) != 0) continue;
        ++report.matched;
        CaseResult res{c.id, false, {}, {}};
        try {
            res = c.run();
        } catch (const CaseResult& failed) {
            res = failed;
        } catch (const std::exception& ex) {
            res.detail = std::string("exception: ") + ex.what();
        }
        (res.pass ? report.passed : report.failed)++;
        report.results.push_back(std::move(res));
    }
    return report;
}

} // namespace loopcalc
