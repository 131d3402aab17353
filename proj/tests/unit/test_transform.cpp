#include <doctest.h>

#include "../support/oracles.hpp"

#include <ordpat/contain.hpp>
#include <ordpat/counting.hpp>
#include <ordpat/errors.hpp>
#include <ordpat/transform.hpp>

#include <map>
#include <set>

using namespace ordpat;

namespace {

OrderedHypergraph hg(int n, std::vector<std::vector<int>> edges) { return OrderedHypergraph(n, edges); }

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

// All partial matchings on [n].
std::vector<OrderedHypergraph> matchings(int n)
{
    std::vector<OrderedHypergraph> out;
    std::vector<VertexSet> edges;
    grow_matchings(n, 1, edges, 0, out);
    return out;
}

} // namespace

TEST_CASE("bracket sequences")
{
    CHECK(BracketSeq::parse("LLRR").to_string() == "LLRR");
    CHECK(BracketSeq::parse("(())").to_string() == "LLRR");
    CHECK(BracketSeq::parse("").pairs() == 0);
    CHECK_THROWS_AS(BracketSeq::parse("RL"), InvariantError);
    CHECK_THROWS_AS(BracketSeq::parse("LLR"), InvariantError);
    CHECK_THROWS_AS(BracketSeq::parse("LX"), InvariantError);
    CHECK(DegreeSequence({2, 1, 0}).total() == 3);
    CHECK_THROWS_AS(DegreeSequence({1, -1}), InvariantError);
}

TEST_CASE("phi and psi of degree-one graphs")
{
    CHECK(phi_deg1(hg(4, {{1, 3}, {2, 4}})) == Permutation({1, 2}));
    CHECK(phi_deg1(hg(4, {{1, 4}, {2, 3}})) == Permutation({2, 1}));
    for (int k = 0; k <= 5; ++k)
        for (const auto & pi : Permutation::all(k))
            REQUIRE(phi_deg1(h_of_pi(pi)) == pi);

    CHECK(psi_brackets(hg(2, {{1, 2}})).to_string() == "LR");
    CHECK(psi_brackets(hg(4, {{1, 3}, {2, 4}})).to_string() == "LLRR");
    CHECK(psi_brackets(hg(4, {{1, 2}, {3, 4}})).to_string() == "LRLR");
    CHECK(support(hg(5, {{2, 5}})) == std::vector<int>{2, 5});

    CHECK_THROWS_AS(phi_deg1(hg(3, {{1, 2}, {2, 3}})), InvariantError);
    CHECK_THROWS_AS(phi_deg1(hg(3, {{1, 2, 3}})), InvariantError);
    CHECK_THROWS_AS(psi_brackets(hg(3, {{1, 2}, {1, 3}})), InvariantError);
}

TEST_CASE("reconstruct degree-one graphs")
{
    auto g = reconstruct_deg1(4, Permutation({1, 2}), BracketSeq::parse("LLRR"), {1, 2, 3, 4});
    CHECK(g == hg(4, {{1, 3}, {2, 4}}));
    CHECK_THROWS_AS(reconstruct_deg1(4, Permutation({2, 1}), BracketSeq::parse("LRLR"), {1, 2, 3, 4}), InvariantError);
    CHECK_THROWS_AS(reconstruct_deg1(4, Permutation({1}), BracketSeq::parse("LLRR"), {1, 2, 3, 4}), InvariantError);
    CHECK_THROWS_AS(reconstruct_deg1(4, Permutation({1, 2}), BracketSeq::parse("LLRR"), {1, 2, 3}), InvariantError);
    CHECK_THROWS_AS(reconstruct_deg1(4, Permutation({1}), BracketSeq::parse("LR"), {3, 2}), InvariantError);

    for (int n = 0; n <= 6; ++n)
        for (const auto & m : matchings(n))
            REQUIRE(reconstruct_deg1(n, phi_deg1(m), psi_brackets(m), support(m)) == m);
}

TEST_CASE("identity permutation is realised by Catalan many bracket sequences")
{
    for (int k = 1; k <= 4; ++k) {
        int count = 0;
        for (const auto & m : matchings(2 * k))
            if (m.edge_count() == k && phi_deg1(m) == Permutation::identity(k))
                ++count;
        CHECK(count == catalan(k));
    }
}

TEST_CASE("edge order triple")
{
    auto t = phi_triple(complete_graph(3));
    CHECK(t.phi_p == Permutation({1, 2, 3}));
    CHECK(t.phi_l == DegreeSequence({2, 1, 0}));
    CHECK(t.phi_r == DegreeSequence({0, 1, 2}));
    auto single = phi_triple(hg(3, {{1, 3}}));
    CHECK(single.phi_p == Permutation({1}));
    CHECK(single.phi_l == DegreeSequence({1, 0, 0}));
    CHECK(single.phi_r == DegreeSequence({0, 0, 1}));
    CHECK(phi_triple(hg(4, {{1, 4}, {2, 3}})).phi_p == Permutation({2, 1}));
    // left order {1,3} {1,4} {2,3}; right order {1,3} {2,3} {1,4}
    CHECK(phi_triple(hg(4, {{1, 3}, {1, 4}, {2, 3}})).phi_p == Permutation({1, 3, 2}));
    CHECK_THROWS_AS(phi_triple(hg(3, {{1, 2, 3}})), InvariantError);
}

TEST_CASE("triple reconstruction")
{
    auto g = reconstruct_triple(3, Permutation({1}), DegreeSequence({1, 0, 0}), DegreeSequence({0, 0, 1}));
    REQUIRE(g);
    CHECK(*g == hg(3, {{1, 3}}));
    CHECK(! reconstruct_triple(2, Permutation({1, 2}), DegreeSequence({2, 0}), DegreeSequence({0, 2})));
    CHECK_THROWS_AS(reconstruct_triple(2, Permutation({1}), DegreeSequence({2, 0}), DegreeSequence({0, 1})), InvariantError);
    CHECK_THROWS_AS(reconstruct_triple(3, Permutation({1}), DegreeSequence({1, 0}), DegreeSequence({0, 1})), InvariantError);

    for (int n = 0; n <= 5; ++n)
        for (const auto & x : oracle::all_graphs(n)) {
            auto t = phi_triple(x);
            auto back = reconstruct_triple(n, t.phi_p, t.phi_l, t.phi_r);
            REQUIRE(back);
            REQUIRE(*back == x);
        }
}

TEST_CASE("triple is injective on graphs on [5]")
{
    std::map<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>, int> seen;
    for (const auto & x : oracle::all_graphs(5)) {
        auto t = phi_triple(x);
        auto key = std::tuple{std::vector<int>(t.phi_p.values().begin(), t.phi_p.values().end()), t.phi_l.entries(),
            t.phi_r.entries()};
        REQUIRE(++seen[key] == 1);
    }
    CHECK(seen.size() == 1024);
}

TEST_CASE("unrealisable triples are rejected")
{
    // Every triple of matching totals on [3] either rebuilds a graph with that triple or is none.
    int realised = 0;
    for (int m = 0; m <= 3; ++m) {
        std::vector<std::vector<int>> seqs;
        for (int a = 0; a <= m; ++a)
            for (int b = 0; a + b <= m; ++b)
                seqs.push_back({a, b, m - a - b});
        for (const auto & p : Permutation::all(m))
            for (const auto & l : seqs)
                for (const auto & r : seqs) {
                    auto g = reconstruct_triple(3, p, DegreeSequence(l), DegreeSequence(r));
                    if (g) {
                        ++realised;
                        auto t = phi_triple(*g);
                        REQUIRE(t.phi_p == p);
                        REQUIRE(t.phi_l.entries() == l);
                        REQUIRE(t.phi_r.entries() == r);
                    }
                }
    }
    CHECK(realised == 8);
}

TEST_CASE("sigma doubling")
{
    CHECK(sigma_double(Permutation({2, 1, 3})) == Permutation({4, 3, 2, 1, 6, 5}));
    CHECK(sigma_double(Permutation({1})) == Permutation({2, 1}));
    for (int k = 0; k <= 6; ++k)
        for (const auto & pi : Permutation::all(k))
            REQUIRE(sigma_double(pi).size() == 2 * k);
}

TEST_CASE("independent matching extraction")
{
    auto g = h_of_pi(sigma_double(Permutation({1})));
    CHECK(g == hg(4, {{1, 4}, {2, 3}}));
    CHECK(extract_independent_matching(g, Permutation({1})) == hg(4, {{1, 4}}));
    CHECK(extract_independent_matching(OrderedHypergraph(3, std::vector<VertexSet>{}), Permutation()).edge_count() == 0);
    CHECK_THROWS_AS(extract_independent_matching(g, Permutation({1, 2})), InvariantError);

    // Every graph on [6] whose phi_p is a doubling yields a matching realising the original.
    int hits = 0;
    for (const auto & x : oracle::all_graphs(6)) {
        auto t = phi_triple(x);
        if (t.phi_p.size() % 2)
            continue;
        for (const auto & pi : Permutation::all(t.phi_p.size() / 2)) {
            if (sigma_double(pi) != t.phi_p)
                continue;
            auto m = extract_independent_matching(x, pi);
            REQUIRE(m.edge_count() == pi.size());
            REQUIRE(oracle::max_degree_of(m) <= 1);
            REQUIRE(phi_deg1(m) == pi);
            ++hits;
        }
    }
    CHECK(hits > 0);

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 1 + static_cast<int>(rng() % 4);
        int n = 4 * k + static_cast<int>(rng() % 4);
        auto pi = oracle::random_perm(rng, k);
        auto a = oracle::subsets(n, 4 * k);
        auto g2 = make_g(n, a[rng() % a.size()], sigma_double(pi));
        auto m = extract_independent_matching(g2, pi);
        REQUIRE(oracle::max_degree_of(m) <= 1);
        REQUIRE(phi_deg1(m) == pi);
    }
}

TEST_CASE("contraction of vertex pairs")
{
    CHECK(contract_pairs(hg(4, {{1, 3}, {2, 4}})) == hg(2, {{1, 2}}));
    CHECK(contract_pairs(hg(4, {{1, 2}})).edge_count() == 0);
    CHECK(contract_pairs(hg(4, {{1, 4}})) == hg(2, {{1, 2}}));
    CHECK(contract_pairs(hg(6, {{1, 3, 6}})) == hg(3, {{1, 2, 3}}));
    CHECK_THROWS_AS(contract_pairs(hg(3, {})), InvariantError);

    for (const auto & h : oracle::all_hypergraphs(4))
        for (int k = 1; k <= 2; ++k)
            for (const auto & pi : Permutation::all(k))
                if (! hg_contains_perm(h, pi))
                    REQUIRE(! hg_contains_perm(contract_pairs(h), pi));
}

TEST_CASE("block compression and witness lifting")
{
    BinaryMatrix a({{1, 0, 0, 1}, {0, 0, 1, 0}});
    CHECK(block_compress(a, 2).to_strings() == std::vector<std::string>{"11", "01"});
    CHECK(block_compress(a, 1) == a);
    CHECK(block_compress(a, 4).to_strings() == std::vector<std::string>{"1", "1"});
    CHECK(block_compress(a, 9).to_strings() == std::vector<std::string>{"1", "1"});
    CHECK(block_compress(BinaryMatrix({{0, 0, 0, 0, 1}}), 2).to_strings() == std::vector<std::string>{"001"});
    CHECK_THROWS_AS(block_compress(a, 0), InvariantError);

    PatternClass one(Permutation({1}));
    Witness bw{{1}, {1, 2}, {1}};
    auto lifted = lift_block_witness(bw, a, 2, one);
    CHECK(lifted.rows == std::vector<int>{1});
    CHECK(lifted.cols == std::vector<int>{1, 4});
    CHECK_THROWS_AS(lift_block_witness(Witness{{2}, {1, 2}, {1}}, a, 2, one), InvariantError);

    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 100; ++trial) {
        auto m = oracle::random_matrix(rng, 4, 6, 0.5);
        PatternClass c(oracle::random_perm(rng, 1 + static_cast<int>(rng() % 2)));
        if (auto w = matrix_contains_class(m, c))
            REQUIRE(lift_block_witness(*w, m, 1, c) == *w);
    }
    int lifts = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int t = 1 + static_cast<int>(rng() % 3);
        auto m = oracle::random_matrix(rng, 2 + static_cast<int>(rng() % 4), 4 + static_cast<int>(rng() % 9), 0.3);
        PatternClass c(oracle::random_perm(rng, 1 + static_cast<int>(rng() % 2)));
        if (auto w = matrix_contains_class(block_compress(m, t), c)) {
            REQUIRE(verify_class_witness(m, c, lift_block_witness(*w, m, t, c)));
            ++lifts;
        }
    }
    CHECK(lifts > 50);
}

TEST_CASE("fat blocks force an all-ones submatrix")
{
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 60; ++trial) {
        int k = 1 + static_cast<int>(rng() % 2);
        int t = 2 * k + static_cast<int>(rng() % 2);
        long long threshold = binomial(t, 2 * k).convert_to<long long>() * (k - 1);
        int fat = static_cast<int>(threshold) + 1;
        int extra_cols = 6;
        int n = t + extra_cols;
        std::set<VertexSet> rows;
        std::uniform_int_distribution<int> pick(0, t - 1);
        while (static_cast<int>(rows.size()) < fat) {
            VertexSet r = 0;
            while (set_size(r) < 2 * k)
                r |= vertex_bit(pick(rng) + 1);
            for (int j = t + 1; j <= n; ++j)
                if (rng() % 2)
                    r |= vertex_bit(j);
            rows.insert(r);
        }
        BinaryMatrix a(static_cast<int>(rows.size()), n, std::vector<VertexSet>(rows.begin(), rows.end()));
        REQUIRE(a.rows_distinct());
        REQUIRE(matrix_contains(a, BinaryMatrix::all_ones(k, 2 * k)));
    }
}

TEST_CASE("incidence and pair-graph reductions")
{
    BinaryMatrix single({{0, 1}, {0, 0}});
    CHECK(incidence_reduction(single).to_strings() == std::vector<std::string>{"11"});
    CHECK(incidence_reduction(BinaryMatrix::identity(2)).to_strings() == std::vector<std::string>{"10", "01"});
    BinaryMatrix upper({{1, 1}, {0, 1}});
    CHECK(incidence_reduction(upper).to_strings() == std::vector<std::string>{"10", "11", "01"});
    CHECK_THROWS_AS(incidence_reduction(BinaryMatrix(2, 3)), InvariantError);

    BinaryMatrix b({{1, 1, 0}, {0, 1, 1}});
    CHECK(pair_graph_reduction(b).to_strings() == std::vector<std::string>{"010", "001", "000"});
    CHECK(pair_graph_reduction(BinaryMatrix::identity(3)).ones() == 0);
    CHECK(pair_graph_reduction(BinaryMatrix({{1, 0, 1}})).to_strings() == std::vector<std::string>{"001", "000", "000"});
    CHECK_THROWS_AS(pair_graph_reduction(BinaryMatrix({{1, 1, 1}})), InvariantError);
}

TEST_CASE("corner pattern")
{
    CHECK(corner_pattern(PatternClass(Permutation({1}))).to_strings() == std::vector<std::string>{"01", "10"});
    CHECK(corner_pattern(PatternClass(Permutation({1, 2}))).to_strings() == std::vector<std::string>{"010", "001", "100"});
    for (int k = 1; k <= 4; ++k)
        for (const auto & pi : Permutation::all(k))
            REQUIRE(corner_pattern(PatternClass(pi)).is_permutation_matrix());
    CHECK_THROWS_AS(corner_pattern(PatternClass(Permutation())), InvariantError);
}

TEST_CASE("reduction witnesses translate")
{
    std::mt19937_64 rng(61);
    int forward = 0, backward = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        auto a = oracle::random_matrix(rng, n, n, 0.45);
        PatternClass c(oracle::random_perm(rng, 1 + static_cast<int>(rng() % 2)));
        if (auto w = matrix_contains_class(incidence_reduction(a), c)) {
            auto t = translate_incidence_witness(a, c, *w);
            REQUIRE(verify_matrix_witness(a, c.permutation_matrix(), t));
            ++forward;
        }
    }
    for (int trial = 0; trial < 300; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        int m = 3 + static_cast<int>(rng() % 6);
        std::vector<VertexSet> rows;
        for (int i = 0; i < m; ++i) {
            int x = 1 + static_cast<int>(rng() % n), y = 1 + static_cast<int>(rng() % n);
            rows.push_back(vertex_bit(x) | vertex_bit(y));
        }
        BinaryMatrix b(m, n, rows);
        PatternClass c(oracle::random_perm(rng, 1 + static_cast<int>(rng() % 2)));
        if (auto w = matrix_contains(pair_graph_reduction(b), corner_pattern(c))) {
            auto t = translate_pair_graph_witness(b, c, *w);
            REQUIRE(verify_class_witness(b, c, t));
            ++backward;
        }
    }
    CHECK(forward > 30);
    CHECK(backward > 30);
}

TEST_CASE("greedy star matching")
{
    BipartiteGraph star{3, 1, {{1}, {1}, {1}}};
    CHECK(greedy_star_matching(star, 3).size() == 1);
    BipartiteGraph perfect{3, 3, {{1}, {2}, {3}}};
    auto pm = greedy_star_matching(perfect, 1);
    CHECK(pm == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}});
    CHECK_THROWS_AS(greedy_star_matching(BipartiteGraph{2, 1, {{1}, {}}}, 2), InvariantError);
    CHECK_THROWS_AS(greedy_star_matching(star, 2), InvariantError);

    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 500; ++trial) {
        int a = 1 + static_cast<int>(rng() % 8), bsz = 1 + static_cast<int>(rng() % 6);
        BipartiteGraph g{a, bsz, std::vector<std::vector<int>>(a)};
        std::vector<int> bdeg(bsz + 1, 0);
        for (int i = 0; i < a; ++i) {
            for (int y = 1; y <= bsz; ++y)
                if (rng() % 3 == 0)
                    g.adjacency[i].push_back(y);
            if (g.adjacency[i].empty())
                g.adjacency[i].push_back(1 + static_cast<int>(rng() % bsz));
            for (int y : g.adjacency[i])
                ++bdeg[y];
        }
        int m = *std::max_element(bdeg.begin(), bdeg.end());
        auto match = greedy_star_matching(g, m);
        std::set<int> as, bs;
        for (auto [x, y] : match) {
            REQUIRE(std::find(g.adjacency[x - 1].begin(), g.adjacency[x - 1].end(), y) != g.adjacency[x - 1].end());
            REQUIRE(as.insert(x).second);
            REQUIRE(bs.insert(y).second);
        }
        REQUIRE(static_cast<int>(match.size()) * m >= a);
    }
}
