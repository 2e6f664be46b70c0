#include <catch_amalgamated.hpp>

#include <cmath>

#include "hsfg/random_model.hpp"
#include "oracles.hpp"

using namespace hsfg;

namespace {
const BaseGraph cherry = oracles::cherry();

// Degree of a ball planted in a fixed urn, with m other balls thrown
// uniformly; one independent draw per call.
long long planted_ball_degree(const BaseGraph& g, int n, long long m, const Word& urn,
                              uint64_t seed) {
	HierGraphView view(g, n, Variant::looped);
	auto nb = view.neighbors(urn);
	long long deg = 0;
	SplitMix64 rng(seed);
	for (long long i = 0; i < m; ++i) {
		Word w(n);
		for (int k = 0; k < n; ++k) w[k] = uniform_digit(rng, g.num_vertices);
		if (std::binary_search(nb.begin(), nb.end(), w)) ++deg;
	}
	return deg;
}
}  // namespace

TEST_CASE("code sampling shape and determinism", "[random_model]") {
	auto s = sample_codes(cherry, 2, 5, 7);
	CHECK(s.codes.size() == 6);
	for (const Word& w : s.codes) {
		CHECK(w.size() == 2);
		for (int d : w) CHECK((d >= 0 && d < 3));
	}
	auto again = sample_codes(cherry, 2, 5, 7);
	CHECK(s.codes == again.codes);
	auto other = sample_codes(cherry, 2, 5, 8);
	CHECK(s.codes != other.codes);
	CHECK(s.c_n == Catch::Approx(5.0 / 9.0));
	CHECK_THROWS_AS(sample_codes(cherry, 2, 0, 1), std::invalid_argument);
}

TEST_CASE("sampled digits are uniform", "[random_model]") {
	auto s = sample_codes(cherry, 5, 20000, 99);
	std::vector<long long> digits;
	for (const Word& w : s.codes)
		for (int d : w) digits.push_back(d);
	std::vector<double> probs(3, 1.0 / 3.0);
	CHECK(oracles::chi_square_binned(digits, 0, 2, probs) > 0.01);
}

TEST_CASE("urn adjacency", "[random_model]") {
	RandomSample s;
	s.level = 2;
	s.ball_target = 3;
	s.c_n = 4.0 / 9.0;
	s.codes = {{1, 1}, {0, 2}, {2, 0}, {0, 2}};
	auto rg = build_random_graph(cherry, s);
	auto edges = random_graph_edges(cherry, s);
	// (1,1)-(0,2) adjacent, (0,2)-(2,0) not, equal codes share an urn
	CHECK(std::count(edges.begin(), edges.end(), std::make_pair(0LL, 1LL)) == 1);
	CHECK(std::count(edges.begin(), edges.end(), std::make_pair(1LL, 2LL)) == 0);
	CHECK(std::count(edges.begin(), edges.end(), std::make_pair(1LL, 3LL)) == 1);
	// degrees agree with the pairwise edge list
	std::vector<long long> deg(4, 0);
	for (auto [a, b] : edges) {
		++deg[a];
		++deg[b];
	}
	for (int i = 0; i < 4; ++i) CHECK(rg.degree[i] == deg[i]);
}

TEST_CASE("graphs rebuild identically from the same seed", "[random_model]") {
	auto s1 = sample_codes(cherry, 3, 100, 42);
	auto s2 = sample_codes(cherry, 3, 100, 42);
	CHECK(random_graph_edges(cherry, s1) == random_graph_edges(cherry, s2));
}

TEST_CASE("isolated-ball statistics", "[random_model]") {
	// bound value at c_n = 8
	RandomSample s8;
	s8.c_n = 8.0;
	RandomGraph empty;
	empty.balls = 1;
	empty.degree = {0};
	auto st = isolated_stats(cherry, s8, empty);
	CHECK(st.bound == Catch::Approx(std::exp(-8.0)).epsilon(1e-14));

	// across seeds at c_n = 1 the mean fraction respects the bound
	double mean = 0.0;
	const int seeds = 20;
	for (int seed = 1; seed <= seeds; ++seed) {
		auto s = sample_codes(cherry, 3, 27, seed);
		auto rg = build_random_graph(cherry, s);
		mean += isolated_stats(cherry, s, rg).fraction;
	}
	mean /= seeds;
	CHECK(mean <= std::exp(-1.0) + 3 * 0.5 / std::sqrt(20.0 * 28.0));

	// enough balls leave no urn singly occupied
	auto s = sample_codes(cherry, 1, 1000, 3);
	auto rg = build_random_graph(cherry, s);
	CHECK(isolated_stats(cherry, s, rg).fraction == 0.0);
}

TEST_CASE("favorable-urn counts and class windows", "[random_model]") {
	CHECK(favorable_urn_count(cherry, 1) == 3);
	CHECK(favorable_urn_count(cherry, 2) == 7);
	CHECK(favorable_urn_count(cherry, 3) == 15);
	CHECK(adjacent_urn_count(cherry, {1, 1}) == 7);
	CHECK(adjacent_urn_count(cherry, {0, 1}) == 3);
	CHECK(k0_threshold(cherry, 4) == Catch::Approx(2.0));
	CHECK_THROWS_AS(favorable_urn_count(oracles::k22(), 1), std::invalid_argument);
}

TEST_CASE("predicted degree mass", "[random_model]") {
	double cn = 16.0;
	int n = 4, k = 3;
	double u = cn * 15.0;
	double pk = std::pow(1.0 / 3.0, k) * (2.0 / 3.0);
	CHECK(theoretical_degree_mass(cherry, n, cn, k, u) ==
	      Catch::Approx(pk * normal_pdf(0.0) / std::sqrt(cn * 15.0)).epsilon(1e-12));
	// class mass p_2 = (1/3)^2 (2/3) = 2/27 at the class-2 peak (valid at n = 3)
	double peak2 = theoretical_degree_mass(cherry, 3, cn, 2, cn * 7.0);
	CHECK(peak2 == Catch::Approx((2.0 / 27.0) * normal_pdf(0.0) / std::sqrt(cn * 7.0)).epsilon(1e-12));
	CHECK_THROWS_AS(theoretical_degree_mass(cherry, n, cn, 2, cn * 7.0), std::invalid_argument);
	CHECK_THROWS_AS(theoretical_degree_mass(cherry, n, cn, 3, 1.0), std::invalid_argument);
}

TEST_CASE("predicted tails", "[random_model]") {
	double cn = 16.0;
	int n = 4, k = 3;
	double u = cn * 15.0;
	double want = std::pow(1.0 / 3.0, k + 1) + std::pow(1.0 / 3.0, k) * (2.0 / 3.0) * 0.5;
	CHECK(tail_probability(cherry, n, cn, u) == Catch::Approx(want).epsilon(1e-12));

	// inside one window the tail shrinks as u grows and stays enveloped
	auto w = degree_window(cherry, cn, k);
	double prev = 1.0;
	for (double t = w.lo; t <= w.hi; t += (w.hi - w.lo) / 50.0) {
		double p = tail_probability(cherry, n, cn, t);
		CHECK(p <= prev + 1e-15);
		CHECK(p >= std::pow(1.0 / 3.0, k + 1));
		CHECK(p <= std::pow(1.0 / 3.0, k));
		prev = p;
	}
	CHECK_THROWS_AS(tail_probability(cherry, n, cn, 1.0), std::invalid_argument);
}

TEST_CASE("power-law envelope constants", "[random_model]") {
	auto env = powerlaw_envelope(cherry);
	CHECK(env.exponent == Catch::Approx(std::log(3.0) / std::log(2.0)).epsilon(1e-14));
	CHECK(env.lower == Catch::Approx(1.0 / 3.0).epsilon(1e-14));
	CHECK(env.upper == Catch::Approx(3.0).epsilon(1e-14));
	CHECK_THROWS_AS(powerlaw_envelope(oracles::k22()), std::invalid_argument);
}

TEST_CASE("degree conditioned on the urn is binomial", "[random_model]") {
	// plant a ball, throw M others, repeat; one urn per suffix class
	const int n = 2;
	const long long m = 162;  // c_n = 18
	const int replicas = 10000;
	int cls = 0;
	for (const Word& urn : {Word{0, 1}, Word{1, 1}, Word{0, 0}}) {
		long long fav = adjacent_urn_count(cherry, urn);
		std::vector<long long> degs;
		for (int r = 0; r < replicas; ++r)
			degs.push_back(planted_ball_degree(cherry, n, m, urn,
			                                   substream_seed(1000 + cls, r)));
		double p = static_cast<double>(fav) / 9.0;
		std::vector<double> probs(m + 1);
		for (long long k = 0; k <= m; ++k) probs[k] = binomial_pmf(m, k, p);
		CHECK(oracles::chi_square_binned(degs, 0, m, probs) > 0.01);
		++cls;
	}
}

TEST_CASE("suffix-class frequencies match their masses", "[random_model]") {
	const int n = 4;
	auto s = sample_codes(cherry, n, 20000, 77);
	for (int k = 1; k <= 3; ++k) {
		long long hits = 0;
		for (const Word& w : s.codes)
			if (cherry.side[w.back()] == 1 && ell(w, cherry) == k) ++hits;
		double pk = std::pow(1.0 / 3.0, k) * (2.0 / 3.0);
		double frac = static_cast<double>(hits) / static_cast<double>(s.codes.size());
		double sigma = std::sqrt(pk * (1 - pk) / static_cast<double>(s.codes.size()));
		CHECK(std::fabs(frac - pk) <= 3 * sigma);
	}
}
