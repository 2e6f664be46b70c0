#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "hsfg/hier_graph.hpp"
#include "hsfg/rng.hpp"
#include "hsfg/stats.hpp"

namespace hsfg {

// Balls thrown uniformly into the level-n words: ball i's code is the first n
// digits of a uniform point of [0,1]. The model keeps M+1 balls for a target
// of M (the extra ball comes with the construction; both numbers are
// recorded). Reproducible from (seed, base, n, M); each ball draws its digits
// from its own substream, so sampling parallelizes without changing output.
struct RandomSample {
	int level = 1;
	long long ball_target = 0;  // M
	double c_n = 0.0;           // M / N^n
	uint64_t seed = 0;
	uint64_t base_hash = 0;
	std::vector<Word> codes;    // M + 1 entries
};

inline RandomSample sample_codes(const BaseGraph& g, int n, long long m, uint64_t seed) {
	if (m < 1) throw std::invalid_argument("ball count must be >= 1");
	if (n < 1) throw std::invalid_argument("level must be >= 1");
	RandomSample s;
	s.level = n;
	s.ball_target = m;
	s.c_n = static_cast<double>(m) / static_cast<double>(pow_ll(g.num_vertices, n));
	s.seed = seed;
	s.base_hash = base_graph_hash(g);
	s.codes.reserve(m + 1);
	for (long long i = 0; i <= m; ++i) {
		SplitMix64 rng(substream_seed(seed, static_cast<uint64_t>(i)));
		Word w(n);
		for (int k = 0; k < n; ++k) w[k] = uniform_digit(rng, g.num_vertices);
		s.codes.push_back(std::move(w));
	}
	return s;
}

// Number of urns adjacent to a code, own urn included (the diagonal cell
// belongs to the embedding): S(x) deg(x_n) + 1.
inline long long adjacent_urn_count(const BaseGraph& g, const Word& x) {
	return degree_formula(x, g, Variant::looped) - 1;
}

// Urn-rule graph on the balls: i ~ j iff their codes are equal or adjacent at
// level n. Only degrees and occupancy are materialized.
struct RandomGraph {
	long long balls = 0;
	std::vector<long long> degree;        // # other balls adjacent
	std::map<Word, long long> occupancy;  // urn -> ball count
};

inline RandomGraph build_random_graph(const BaseGraph& g, const RandomSample& s) {
	RandomGraph rg;
	rg.balls = static_cast<long long>(s.codes.size());
	for (const Word& c : s.codes) ++rg.occupancy[c];
	HierGraphView view(g, s.level, Variant::looped);
	std::map<Word, long long> reach;  // urn -> occupancy of its closed neighborhood
	for (const auto& [urn, cnt] : rg.occupancy) {
		long long sum = 0;
		for (const Word& w : view.neighbors(urn)) {
			auto it = rg.occupancy.find(w);
			if (it != rg.occupancy.end()) sum += it->second;
		}
		reach[urn] = sum;
	}
	rg.degree.reserve(rg.balls);
	for (const Word& c : s.codes) rg.degree.push_back(reach[c] - 1);
	return rg;
}

// Ordered ball pairs (i < j) that are adjacent; for desk-scale checks.
inline std::vector<std::pair<long long, long long>> random_graph_edges(
    const BaseGraph& g, const RandomSample& s, long long max_pairs = kDefaultMaxPairs) {
	long long b = static_cast<long long>(s.codes.size());
	if (b * (b - 1) / 2 > max_pairs)
		throw guard_error("edge enumeration needs " + std::to_string(b * (b - 1) / 2) +
		                  " pair checks; raise --max-pairs");
	HierGraphView view(g, s.level, Variant::looped);
	std::vector<std::pair<long long, long long>> out;
	for (long long i = 0; i < b; ++i)
		for (long long j = i + 1; j < b; ++j)
			if (view.is_edge(s.codes[i], s.codes[j])) out.emplace_back(i, j);
	return out;
}

struct IsolatedStats {
	long long isolated = 0;
	long long balls = 0;
	double fraction = 0.0;
	double bound = 0.0;  // e^{-d_min c_n}
};

inline IsolatedStats isolated_stats(const BaseGraph& g, const RandomSample& s,
                                    const RandomGraph& rg) {
	IsolatedStats st;
	st.balls = rg.balls;
	for (long long d : rg.degree)
		if (d == 0) ++st.isolated;
	st.fraction = static_cast<double>(st.isolated) / static_cast<double>(st.balls);
	st.bound = std::exp(-static_cast<double>(g.min_degree()) * s.c_n);
	return st;
}

// Favorable-urn count at suffix length k under the regularity assumption:
// m_k = (d1^{k+1} - 1)/(d1 - 1), one less than the degree threshold t_k. The
// urn model sees m_k adjacent urns (own urn included); reports surface both.
inline long long favorable_urn_count(const BaseGraph& g, int k) {
	auto a1 = check_regularity_a1(g);
	if (!a1.holds) throw std::invalid_argument("favorable-urn count requires A1");
	return degree_threshold_t(a1.d1, k) - 1;
}

// Gaussian window half-width constant: P(|Z| > 4.5) < e^{-10}.
inline constexpr double kGaussianWindowK = 4.5;

struct DegreeWindow {
	int k = 0;
	double center = 0.0;  // c_n m_k
	double lo = 0.0, hi = 0.0;
};

inline DegreeWindow degree_window(const BaseGraph& g, double c_n, int k) {
	DegreeWindow w;
	w.k = k;
	w.center = c_n * static_cast<double>(favorable_urn_count(g, k));
	double half = kGaussianWindowK * std::sqrt(w.center);
	w.lo = w.center - half;
	w.hi = w.center + half;
	return w;
}

// Mass of P(deg = u) predicted for a uniformly chosen ball when u sits in the
// window of suffix class k > k0(n):
//   p_k phi((u - c_n m_k)/sqrt(c_n m_k (1 - m_k/N^n))) / sqrt(c_n m_k),
// with p_k = (n1/N)^k n2/N. The vanishing error term is omitted.
inline double theoretical_degree_mass(const BaseGraph& g, int n, double c_n, int k, double u) {
	if (static_cast<double>(k) <= k0_threshold(g, n))
		throw std::invalid_argument("suffix class k must exceed k0(n)");
	DegreeWindow w = degree_window(g, c_n, k);
	if (u < w.lo || u > w.hi)
		throw std::invalid_argument("u lies outside the class-k degree window");
	double N = g.num_vertices;
	double p_k = std::pow(g.n1() / N, k) * (g.n2() / N);
	double m_k = static_cast<double>(favorable_urn_count(g, k));
	double var = c_n * m_k * (1.0 - m_k / std::pow(N, n));
	return p_k * normal_pdf((u - w.center) / std::sqrt(var)) / std::sqrt(c_n * m_k);
}

// Tail P(deg > u) for u in the window of some class k > k0(n):
//   (n1/N)^{k+1} + (n1/N)^k (n2/N) (1 - Phi(.)), error term omitted.
inline double tail_probability(const BaseGraph& g, int n, double c_n, double u) {
	double k0 = k0_threshold(g, n);
	int best_k = -1;
	double best_gap = 0.0;
	for (int k = 1; k <= n; ++k) {
		if (static_cast<double>(k) <= k0) continue;
		DegreeWindow w = degree_window(g, c_n, k);
		if (u < w.lo || u > w.hi) continue;
		double gap = std::fabs(u - w.center);
		if (best_k < 0 || gap < best_gap) {
			best_k = k;
			best_gap = gap;
		}
	}
	if (best_k < 0) throw std::invalid_argument("u lies in no class window above k0(n)");
	double N = g.num_vertices;
	DegreeWindow w = degree_window(g, c_n, best_k);
	double m_k = static_cast<double>(favorable_urn_count(g, best_k));
	double var = c_n * m_k * (1.0 - m_k / std::pow(N, n));
	double upper = 1.0 - normal_cdf((u - w.center) / std::sqrt(var));
	return std::pow(g.n1() / N, best_k + 1) +
	       std::pow(g.n1() / N, best_k) * (g.n2() / N) * upper;
}

struct PowerlawEnvelope {
	double exponent = 0.0;  // gamma - 1 = log(N/n1)/log d1
	double lower = 0.0;     // n1/N
	double upper = 0.0;     // N/n1
};

inline PowerlawEnvelope powerlaw_envelope(const BaseGraph& g) {
	auto a1 = check_regularity_a1(g);
	if (!a1.holds) throw std::invalid_argument("the power-law envelope requires A1");
	PowerlawEnvelope env;
	double N = g.num_vertices;
	env.exponent = std::log(N / g.n1()) / std::log(static_cast<double>(a1.d1));
	env.lower = g.n1() / N;
	env.upper = N / g.n1();
	return env;
}

}  // namespace hsfg
