#include <catch_amalgamated.hpp>

// Randomized cross-checks over arbitrary small bipartite bases, not just the
// named fixtures.

#include "hsfg/fractal.hpp"
#include "hsfg/hier_graph.hpp"
#include "hsfg/rng.hpp"
#include "oracles.hpp"

using namespace hsfg;

namespace {

BaseGraph random_base(SplitMix64& rng) {
	while (true) {
		int n = 2 + uniform_digit(rng, 6);  // 2..7 vertices
		std::vector<int> v1;
		for (int v = 0; v < n; ++v)
			if (rng.next() & 1) v1.push_back(v);
		if (v1.empty() || static_cast<int>(v1.size()) == n) continue;
		std::vector<std::pair<int, int>> edges, re;
		for (int a = 0; a < n; ++a)
			for (int b = a + 1; b < n; ++b) {
				bool a1 = std::find(v1.begin(), v1.end(), a) != v1.end();
				bool b1 = std::find(v1.begin(), v1.end(), b) != v1.end();
				if (a1 != b1) {
					if (rng.next() % 3) edges.emplace_back(a, b);
				} else if (rng.next() % 3 == 0) {
					re.emplace_back(a, b);
				}
			}
		if (edges.empty()) continue;
		return make_base_graph(n, v1, edges, re);
	}
}

Word random_word(SplitMix64& rng, int base_n, int n) {
	Word w(n);
	for (int& d : w) d = uniform_digit(rng, base_n);
	return w;
}

}  // namespace

TEST_CASE("random bases: round-trip, symmetry, degrees", "[properties]") {
	SplitMix64 rng(0xC0FFEE);
	for (int trial = 0; trial < 40; ++trial) {
		BaseGraph g = random_base(rng);
		CAPTURE(serialize_base_graph(g));

		std::string canon = serialize_base_graph(g);
		CHECK(serialize_base_graph(parse_base_graph(canon)) == canon);

		int n = 1 + static_cast<int>(rng.next() % 4);
		for (Variant variant : {Variant::looped, Variant::simple, Variant::clustered}) {
			HierGraphView v(g, n, variant);
			for (int rep = 0; rep < 30; ++rep) {
				Word x = random_word(rng, g.num_vertices, n);
				Word y = random_word(rng, g.num_vertices, n);
				CHECK(v.is_edge(x, y) == v.is_edge(y, x));
				long long want = degree_formula(x, g, variant) - (variant == Variant::looped ? 1 : 0);
				CHECK(static_cast<long long>(v.neighbors(x).size()) == want);
			}
		}
	}
}

TEST_CASE("random bases: walks equal edges at low levels", "[properties]") {
	SplitMix64 rng(0xBEEF);
	for (int trial = 0; trial < 15; ++trial) {
		BaseGraph g = random_base(rng);
		CAPTURE(serialize_base_graph(g));
		IfsGraph ifs = build_ifs_graph(g);
		for (int n = 1; n <= 2; ++n) {
			std::set<std::pair<Word, Word>> from_paths;
			for (const auto& p : enumerate_paths(ifs, n)) from_paths.insert(path_words(ifs, p));
			HierGraphView v(g, n, Variant::looped);
			std::set<std::pair<Word, Word>> from_edges;
			auto words = all_words(g.num_vertices, n);
			for (const Word& x : words)
				for (const Word& y : words)
					if (v.is_edge(x, y)) from_edges.emplace(x, y);
			CHECK(from_paths == from_edges);
		}
	}
}

TEST_CASE("disconnected bases keep the finite diameter", "[properties]") {
	auto g = make_base_graph(4, {0, 2}, {{0, 1}, {2, 3}});
	CHECK_FALSE(g.connected);
	CHECK(g.diam == 1);
	auto g2 = make_base_graph(5, {0, 2}, {{0, 1}, {2, 3}, {2, 4}});
	CHECK(g2.diam == 2);  // 3..2..4 inside the larger component
	CHECK_FALSE(g2.connected);
}
