// Acceptance suite: one line per criterion, exit status 0 only when all pass.

#include "../support/goldens.hpp"
#include "../support/oracles.hpp"

#include <ordpat/cli.hpp>
#include <ordpat/contain.hpp>
#include <ordpat/core.hpp>
#include <ordpat/counting.hpp>
#include <ordpat/enumerate.hpp>
#include <ordpat/extremal.hpp>
#include <ordpat/transform.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace ordpat;

namespace {

// Wall-clock limits in seconds.
constexpr double limit_ac1 = 5, limit_ac2 = 30, limit_ac3 = 5, limit_ac4 = 60, limit_ac5 = 60, limit_ac6 = 30,
                 limit_ac7 = 30, limit_ac8 = 10, limit_ac9 = 120, limit_ac10 = 600, limit_ac11 = 30, limit_ac12 = 5,
                 limit_ac13 = 120;

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string & what)
    {
        if (! cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::vector<int> vals(const Permutation & p) { return {p.values().begin(), p.values().end()}; }

std::string big_list(const std::vector<BigInt> & xs)
{
    std::string s;
    for (const auto & x : xs)
        s += (s.empty() ? "" : " ") + x.str();
    return s;
}

PropertySpec avoiding(std::vector<Permutation> pis, Universe u = Universe::permutation)
{
    PropertySpec s;
    s.universe = u;
    for (auto & p : pis)
        s.forbidden.push_back(PermPattern{p});
    return s;
}

void ac1(Check & c)
{
    const std::vector<BigInt> want{1, 2, 5, 14, 42, 132};
    for (const auto & sigma : Permutation::all(3)) {
        auto t = speed_table(avoiding({sigma}), 6).counts;
        c.require(t == want, "avoid " + sigma.to_string() + " gave " + big_list(t));
    }
}

void ac2(Check & c)
{
    const std::vector<BigInt> want{1, 2, 4, 9, 21, 52, 134, 361};
    std::vector<BigInt> got;
    for (int n = 1; n <= 8; ++n) {
        got.push_back(matching_family(n).size());
        c.require(lb_formula(n) == want[n - 1], "lb_formula(" + std::to_string(n) + ")");
    }
    c.require(got == want, "family sizes " + big_list(got));
}

void ac3(Check & c)
{
    for (int k = 1; k <= 5; ++k) {
        std::set<std::vector<int>> classes;
        auto perms = oracle::all_perms(k);
        for (const auto & a : perms)
            for (const auto & b : perms)
                classes.insert(vals(canonical_pattern(BinaryMatrix::permutation_matrix(a), BinaryMatrix::permutation_matrix(b)).m_perm()));
        c.require(classes.size() == perms.size(), "k=" + std::to_string(k) + " gave " + std::to_string(classes.size()));
    }
}

void ac4(Check & c)
{
    auto hs = oracle::all_hypergraphs(4);
    c.require(hs.size() == 2048, "hypergraph count");
    for (const auto & h : hs)
        for (int k = 1; k <= 2; ++k)
            for (const auto & pi : Permutation::all(k)) {
                bool a = hg_contains_perm(h, pi).has_value();
                bool b = matrix_contains_class(incidence_matrix(h), PatternClass(pi)).has_value();
                bool d = hg_contains(h_of_pi(pi), h).has_value();
                bool o = oracle::hg_contains_perm(h, vals(pi));
                c.require(a == b && a == d && a == o, "routes disagree for pi " + pi.to_string());
            }
}

OrderedHypergraph sparse_hypergraph(std::mt19937_64 & rng, int n)
{
    std::set<VertexSet> edges;
    int m = static_cast<int>(rng() % 5);
    while (static_cast<int>(edges.size()) < m) {
        VertexSet e = 0;
        int size = 2 + static_cast<int>(rng() % 3);
        while (set_size(e) < size)
            e |= vertex_bit(1 + static_cast<int>(rng() % n));
        edges.insert(e);
    }
    return OrderedHypergraph(n, std::vector<VertexSet>(edges.begin(), edges.end()));
}

void ac5(Check & c)
{
    for (const auto & h : oracle::all_hypergraphs(4))
        for (int k = 1; k <= 2; ++k)
            for (const auto & pi : Permutation::all(k))
                if (! hg_contains_perm(h, pi))
                    c.require(! hg_contains_perm(contract_pairs(h), pi), "exhaustive counterexample");
    std::mt19937_64 rng(5);
    std::vector<Permutation> pis{Permutation({1}), Permutation({1, 2}), Permutation({2, 1})};
    int cases = 0;
    for (long attempt = 0; cases < 10000 && attempt < 1000000; ++attempt) {
        auto h = sparse_hypergraph(rng, 8);
        const auto & pi = pis[1 + rng() % 2];
        if (hg_contains_perm(h, pi))
            continue;
        ++cases;
        c.require(! hg_contains_perm(contract_pairs(h), pi), "randomized counterexample");
    }
    c.require(cases == 10000, "only " + std::to_string(cases) + " avoiding cases generated");
}

void ac6(Check & c)
{
    std::mt19937_64 rng(6);
    int cases = 0;
    for (long attempt = 0; cases < 1000 && attempt < 1000000; ++attempt) {
        int t = 1 + static_cast<int>(rng() % 3);
        auto a = oracle::random_matrix(rng, 2 + static_cast<int>(rng() % 5), 4 + static_cast<int>(rng() % 12), 0.3);
        PatternClass cls(oracle::random_perm(rng, 1 + static_cast<int>(rng() % 3)));
        auto w = matrix_contains_class(block_compress(a, t), cls);
        if (! w)
            continue;
        ++cases;
        c.require(verify_class_witness(a, cls, lift_block_witness(*w, a, t, cls)), "lifted witness rejected");
    }
    c.require(cases == 1000, "only " + std::to_string(cases) + " instances");
}

void ac7(Check & c)
{
    std::mt19937_64 rng(7);
    int forward = 0, backward = 0;
    for (long attempt = 0; forward < 1000 && attempt < 1000000; ++attempt) {
        int n = 3 + static_cast<int>(rng() % 5);
        auto a = oracle::random_matrix(rng, n, n, 0.45);
        PatternClass cls(oracle::random_perm(rng, 1 + static_cast<int>(rng() % 2)));
        auto w = matrix_contains_class(incidence_reduction(a), cls);
        if (! w)
            continue;
        ++forward;
        c.require(verify_matrix_witness(a, cls.permutation_matrix(), translate_incidence_witness(a, cls, *w)),
            "incidence witness rejected");
    }
    for (long attempt = 0; backward < 1000 && attempt < 1000000; ++attempt) {
        int n = 4 + static_cast<int>(rng() % 5);
        int m = 3 + static_cast<int>(rng() % 8);
        std::vector<VertexSet> rows;
        for (int i = 0; i < m; ++i)
            rows.push_back(vertex_bit(1 + static_cast<int>(rng() % n)) | vertex_bit(1 + static_cast<int>(rng() % n)));
        BinaryMatrix b(m, n, rows);
        PatternClass cls(oracle::random_perm(rng, 1 + static_cast<int>(rng() % 2)));
        auto w = matrix_contains(pair_graph_reduction(b), corner_pattern(cls));
        if (! w)
            continue;
        ++backward;
        c.require(verify_class_witness(b, cls, translate_pair_graph_witness(b, cls, *w)), "pair-graph witness rejected");
    }
    c.require(forward == 1000 && backward == 1000, "too few instances");
}

void grow_matchings(int n, int v, std::vector<VertexSet> & edges, VertexSet used, std::vector<OrderedHypergraph> & out)
{
    while (v <= n && contains_vertex(used, v))
        ++v;
    if (v > n) {
        out.emplace_back(n, edges);
        return;
    }
    grow_matchings(n, v + 1, edges, used | vertex_bit(v), out);
    for (int u = v + 1; u <= n; ++u) {
        if (contains_vertex(used, u))
            continue;
        edges.push_back(vertex_bit(v) | vertex_bit(u));
        grow_matchings(n, v + 1, edges, used | vertex_bit(v) | vertex_bit(u), out);
        edges.pop_back();
    }
}

std::vector<OrderedHypergraph> matchings(int n)
{
    std::vector<OrderedHypergraph> out;
    std::vector<VertexSet> edges;
    grow_matchings(n, 1, edges, 0, out);
    return out;
}

void ac8(Check & c)
{
    const std::vector<int> want{1, 2, 5, 14};
    for (int k = 1; k <= 4; ++k) {
        int count = 0;
        for (const auto & m : matchings(2 * k))
            if (m.edge_count() == k && phi_deg1(m) == Permutation::identity(k))
                ++count;
        c.require(count == want[k - 1] && catalan(k) == want[k - 1], "k=" + std::to_string(k) + " gave " + std::to_string(count));
    }
}

void ac9(Check & c)
{
    for (int n = 0; n <= 6; ++n)
        for (const auto & m : matchings(n))
            c.require(reconstruct_deg1(n, phi_deg1(m), psi_brackets(m), support(m)) == m, "degree-one round trip");
    std::set<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>> seen;
    auto graphs = oracle::all_graphs(5);
    for (const auto & g : graphs) {
        auto t = phi_triple(g);
        seen.insert({vals(t.phi_p), t.phi_l.entries(), t.phi_r.entries()});
        auto back = reconstruct_triple(5, t.phi_p, t.phi_l, t.phi_r);
        c.require(back && *back == g, "triple round trip");
    }
    c.require(seen.size() == graphs.size(), "triple not injective");
}

int oracle_extremal(int n, const std::vector<MatrixPattern> & pats)
{
    int best = 0;
    for (const auto & rows : oracle::all_matrices(n, n)) {
        int ones = 0;
        for (VertexSet r : rows)
            ones += oracle::popcount(r);
        if (ones <= best)
            continue;
        BinaryMatrix m(n, n, rows);
        bool ok = true;
        for (const auto & p : pats) {
            if (const auto * b = std::get_if<BinaryMatrix>(&p))
                ok = ok && ! oracle::matrix_contains(m, *b);
            else
                ok = ok && ! oracle::class_contains(m, vals(std::get<PatternClass>(p).m_perm()));
        }
        if (ok)
            best = ones;
    }
    return best;
}

void ac10(Check & c)
{
    BinaryMatrix s1 = s1_matrix(), s2 = s2_matrix();
    std::vector<std::vector<MatrixPattern>> sets{{s1}, {s2}, {s1, s2}, {BinaryMatrix::identity(2)},
        {BinaryMatrix::identity(3)}, {BinaryMatrix::all_ones(2, 2)}, {PatternClass(Permutation({2, 1}))},
        {PatternClass(Permutation({1, 2}))}};
    for (const auto & pats : sets)
        for (int n = 1; n <= 4; ++n) {
            auto r = extremal_ones(n, pats);
            c.require(r.value == oracle_extremal(n, pats), "oracle mismatch at n=" + std::to_string(n));
            c.require(avoids_all(r.witness, pats) && r.witness.ones() == r.value, "witness rejected");
        }
    for (const auto & pats : std::vector<std::vector<MatrixPattern>>{{s1}, {s2}, {s1, s2}}) {
        int prev = 0;
        for (int n = 1; n <= 6; ++n) {
            auto r = extremal_ones(n, pats);
            c.require(r.value >= prev, "not nondecreasing at n=" + std::to_string(n));
            c.require(avoids_all(r.witness, pats) && r.witness.ones() == r.value, "witness rejected");
            prev = r.value;
        }
    }
}

void ac11(Check & c)
{
    PropertySpec s;
    s.universe = Universe::graph;
    s.filters = {GraphFilter::comatching};
    auto t = speed_table(s, 6).counts;
    c.require(t == std::vector<BigInt>{1, 2, 4, 10, 26, 76}, "got " + big_list(t));
}

void ac12(Check & c)
{
    c.require(c_bound(2) == 192, "C_bound(2)");
    c.require(constants(1).c_1 == 385, "C_1(1)");
    c.require(g_d(2, 3) == 7, "g_2(3)");
    for (int k = 1; k <= 2; ++k) {
        auto k_consts = constants(k);
        c.require(k_consts.c_k > BigInt(1) << (8 * k * k * k), "c_k threshold k=" + std::to_string(k));
    }
    for (int d = 1; d <= 6; ++d)
        for (int x = 3 * d + 1; x <= 60; ++x)
            c.require(g_d(d, x) < 2 * d * binomial(x, d - 1), "g_D bound D=" + std::to_string(d));
}

std::string read_file(const std::string & path)
{
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void ac13(Check & c)
{
    std::vector<PropertySpec> specs{avoiding({Permutation({1, 3, 2})}), avoiding({Permutation({2, 1})}, Universe::graph),
        avoiding({Permutation({1, 2})}, Universe::hypergraph), avoiding({Permutation({2, 1})}, Universe::partition)};
    std::vector<int> ns{8, 6, 4, 8};
    for (std::size_t i = 0; i < specs.size(); ++i) {
        std::vector<Enumeration> runs;
        for (int jobs : {1, 2, 0}) {
            EnumerateOptions o;
            o.jobs = jobs;
            o.collect = true;
            runs.push_back(enumerate(specs[i], ns[i], o));
        }
        for (const auto & r : runs)
            c.require(r.count == runs[0].count && r.items == runs[0].items, "enumeration differs across workers");
    }
    std::vector<MatrixPattern> both{s1_matrix(), s2_matrix()};
    std::vector<ExtremalResult> xs;
    for (int jobs : {1, 2, 0}) {
        ExtremalOptions o;
        o.jobs = jobs;
        xs.push_back(extremal_ones(5, both, o));
    }
    for (const auto & x : xs)
        c.require(x.value == xs[0].value && x.witness == xs[0].witness, "extremal differs across workers");
    for (int jobs : {1, 2, 0}) {
        auto w = max_weight_avoiding(4, Permutation({2, 1}), jobs);
        auto base = max_weight_avoiding(4, Permutation({2, 1}));
        c.require(w.value == base.value && w.witness == base.witness, "weight search differs across workers");
    }
    for (const auto & g : golden::cases()) {
        std::string want = read_file(std::string(ORDPAT_GOLDEN_DIR) + "/" + g.name + ".json");
        for (int run = 0; run < 2; ++run) {
            std::ostringstream out, err;
            int code = cli::run(g.args, out, err);
            c.require(code == 0 && out.str() == want, "golden " + g.name + " differs");
        }
    }
}

struct Criterion {
    std::string id;
    std::string title;
    double limit;
    std::function<void(Check &)> body;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {"AC1", "patterns of length 3 avoided by Catalan many permutations", limit_ac1, ac1},
        {"AC2", "speed of the matching family equals the lower-bound formula", limit_ac2, ac2},
        {"AC3", "k! pattern classes for k <= 5", limit_ac3, ac3},
        {"AC4", "three containment routes agree on [4]", limit_ac4, ac4},
        {"AC5", "contraction preserves avoidance", limit_ac5, ac5},
        {"AC6", "block witnesses lift", limit_ac6, ac6},
        {"AC7", "reduction witnesses translate", limit_ac7, ac7},
        {"AC8", "identity realised by Catalan many bracket sequences", limit_ac8, ac8},
        {"AC9", "degree-one and triple bijections", limit_ac9, ac9},
        {"AC10", "extremal solver against exhaustive search", limit_ac10, ac10},
        {"AC11", "co-matching speeds are telephone numbers", limit_ac11, ac11},
        {"AC12", "constants pipeline", limit_ac12, ac12},
        {"AC13", "determinism across worker counts and runs", limit_ac13, ac13},
    };
    int failed = 0;
    for (const auto & cr : criteria) {
        Check c;
        auto start = std::chrono::steady_clock::now();
        try {
            cr.body(c);
        } catch (const std::exception & e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.require(secs <= cr.limit, "took longer than the limit");
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (c.ok ? "[PASS] " : "[FAIL] ") << cr.id << " " << cr.title << " (" << secs << " s, limit " << cr.limit
             << " s)";
        if (! c.ok)
            line << ": " << c.detail;
        std::cout << line.str() << std::endl;
        failed += ! c.ok;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed ? 1 : 0;
}
