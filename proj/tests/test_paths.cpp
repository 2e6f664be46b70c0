#include <catch_amalgamated.hpp>

#include <cmath>

#include "hsfg/paths.hpp"
#include "oracles.hpp"

using namespace hsfg;
using oracles::Rat;

namespace {
const BaseGraph cherry = oracles::cherry();
}

TEST_CASE("smallest-neighbor p-map", "[paths]") {
	PMap p = choose_p_map(cherry);
	CHECK(p(0) == 1);
	CHECK(p(1) == 0);
	CHECK(p(2) == 1);

	auto lonely = make_base_graph(3, {1}, {{1, 0}});
	CHECK_THROWS_AS(choose_p_map(lonely), std::invalid_argument);
}

TEST_CASE("explicit short paths at level two", "[paths]") {
	PMap p = choose_p_map(cherry);
	auto rep = construct_short_path(cherry, 2, {0, 1}, {2, 1}, p);
	CHECK(rep.vertices ==
	      std::vector<Word>{{0, 1}, {0, 0}, {1, 1}, {2, 0}, {2, 1}});
	CHECK(rep.length == 4);
	CHECK(rep.lower_bound == 3);
	CHECK(rep.upper_bound == 4);

	rep = construct_short_path(cherry, 2, {1, 1}, {1, 0}, p);
	CHECK(rep.length == 1);
	CHECK(rep.lower_bound == 1);
	CHECK(rep.upper_bound == 2);

	rep = construct_short_path(cherry, 2, {2, 2}, {2, 2}, p);
	CHECK(rep.length == 0);
	CHECK(rep.vertices == std::vector<Word>{{2, 2}});
}

TEST_CASE("distances by search", "[paths]") {
	HierGraphView v(cherry, 2, Variant::looped);
	CHECK(bfs_distance(v, {0, 1}, {2, 1}) == 4);
	CHECK(bfs_distance(v, {1, 1}, {1, 0}) == 1);
	CHECK(bfs_distance(v, {2, 2}, {2, 2}) == 0);
}

TEST_CASE("constructed paths are valid walks inside the stated bounds", "[paths]") {
	const BaseGraph k22 = oracles::k22();
	const BaseGraph fan = oracles::fanlike();
	for (const BaseGraph* g : {&cherry, &k22, &fan}) {
		PMap p = choose_p_map(*g);
		int cap = g == &cherry ? 3 : 2;
		for (int n = 1; n <= cap; ++n) {
			HierGraphView v(*g, n, Variant::looped);
			auto words = all_words(g->num_vertices, n);
			for (const Word& x : words)
				for (const Word& y : words) {
					auto rep = construct_short_path(*g, n, x, y, p);
					REQUIRE(!rep.vertices.empty());
					CHECK(rep.vertices.front() == x);
					CHECK(rep.vertices.back() == y);
					for (size_t i = 0; i + 1 < rep.vertices.size(); ++i) {
						CHECK(rep.vertices[i] != rep.vertices[i + 1]);
						CHECK(v.is_edge(rep.vertices[i], rep.vertices[i + 1]));
					}
					long long d = bfs_distance(v, x, y);
					CHECK(rep.lower_bound <= d);
					CHECK(d <= rep.length);
					CHECK(rep.length <= rep.upper_bound);
				}
		}
	}
}

TEST_CASE("diameter values and bound", "[paths]") {
	CHECK(diameter(HierGraphView(cherry, 1, Variant::looped)) == 2);
	CHECK(diameter(HierGraphView(cherry, 2, Variant::looped)) == 4);
	long long d3 = diameter(HierGraphView(cherry, 3, Variant::looped));
	CHECK(d3 <= 2 * 3 + cherry.diam - 2);
}

TEST_CASE("diameter is independent of the worker count", "[paths]") {
	HierGraphView v(cherry, 3, Variant::looped);
	CHECK(diameter(v, kDefaultMaxPairs, 1) == diameter(v, kDefaultMaxPairs, 3));
	auto one = average_distance_exact(v, kDefaultMaxPairs, 1);
	auto three = average_distance_exact(v, kDefaultMaxPairs, 3);
	CHECK(one.mean == three.mean);
	CHECK(one.mean_blocks == three.mean_blocks);
}

TEST_CASE("average distance with bounds and block statistics", "[paths]") {
	HierGraphView v(cherry, 2, Variant::looped);
	auto st = average_distance_exact(v);
	CHECK(st.pairs == 81);
	CHECK(st.lower_bound == Catch::Approx(8.0 / 9.0).epsilon(1e-14));
	CHECK(st.upper_bound == Catch::Approx(3.0 + 8.0 / 9.0).epsilon(1e-14));
	CHECK(st.lower_bound < st.mean);
	CHECK(st.mean < st.upper_bound);
	CHECK(st.expected_blocks_formula == Catch::Approx(101.0 / 81.0).epsilon(1e-14));
	// enumerated mean block count, identical-pair postfixes counting one block
	CHECK(st.mean_blocks == Catch::Approx(105.0 / 81.0).epsilon(1e-14));
}

TEST_CASE("per-prefix-class block means match the conditional formula", "[paths]") {
	// over pairs with a common prefix of length k < n the mean block count is
	// exactly 1 + (n-k-1) 2 n1 n2 / N^2
	for (int n = 2; n <= 4; ++n) {
		auto words = all_words(3, n);
		std::vector<long long> sums(n + 1, 0), counts(n + 1, 0);
		for (const Word& x : words)
			for (const Word& y : words) {
				int k = split_common_prefix(x, y).prefix_len;
				Word tail(x.begin() + k, x.end());
				sums[k] += k == n ? 1 : block_count(tail, cherry);
				counts[k] += 1;
			}
		Rat q(2 * 1 * 2, 9);
		for (int k = 0; k < n; ++k) {
			Rat want = Rat(1) + Rat(n - k - 1) * q;
			CHECK(Rat(sums[k], counts[k]) == want);
		}
	}
}

TEST_CASE("prefix lengths follow the truncated geometric law", "[paths]") {
	const int n = 4, trials = 100000;
	SplitMix64 rng(20240809);
	std::vector<long long> samples;
	for (int t = 0; t < trials; ++t) {
		Word x(n), y(n);
		for (int i = 0; i < n; ++i) x[i] = uniform_digit(rng, 3);
		for (int i = 0; i < n; ++i) y[i] = uniform_digit(rng, 3);
		samples.push_back(split_common_prefix(x, y).prefix_len);
	}
	std::vector<double> probs(n + 1);
	for (int k = 0; k < n; ++k) probs[k] = std::pow(1.0 / 3.0, k) * (2.0 / 3.0);
	probs[n] = std::pow(1.0 / 3.0, n);
	CHECK(oracles::chi_square_binned(samples, 0, n, probs) > 0.01);
}

TEST_CASE("sampled distances land near the exact mean", "[paths]") {
	HierGraphView v(cherry, 3, Variant::looped);
	auto exact = average_distance_exact(v);
	auto sampled = average_distance_sampled(v, 4000, 11);
	CHECK(sampled.pairs == 4000);
	CHECK(std::fabs(sampled.mean - exact.mean) < 0.15);
	auto again = average_distance_sampled(v, 4000, 11);
	CHECK(sampled.mean == again.mean);
	CHECK_THROWS_AS(average_distance_sampled(v, 0, 1), std::invalid_argument);
}

TEST_CASE("distance machinery requires a connected base", "[paths]") {
	auto two_parts = make_base_graph(4, {0, 2}, {{0, 1}, {2, 3}});
	CHECK_FALSE(two_parts.connected);
	HierGraphView v(two_parts, 2, Variant::looped);
	CHECK_THROWS_AS(diameter(v), std::invalid_argument);
	CHECK_THROWS_AS(average_distance_exact(v), std::invalid_argument);
	PMap p = choose_p_map(two_parts);
	CHECK_THROWS_AS(construct_short_path(two_parts, 2, {0, 0}, {3, 3}, p), std::invalid_argument);
	// unreachable pairs surface as -1 from the search
	CHECK(bfs_distance(v, {0, 0}, {3, 3}) == -1);
}
