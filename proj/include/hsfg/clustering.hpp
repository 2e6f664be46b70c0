#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hsfg/hier_graph.hpp"
#include "hsfg/rng.hpp"

namespace hsfg {

enum class TriangleClass { regular_one, regular_two, irregular };

namespace detail {

inline void require_clustered(const HierGraphView& v) {
	if (v.variant != Variant::clustered)
		throw std::invalid_argument("triangle calculus applies to the clustered variant");
}

}  // namespace detail

// Classifies a triangle of the clustered graph relative to its first vertex.
// Regular triangles carry exactly two level-n base-rule edges; type one iff
// the anchor is not an endpoint of the remaining RE edge.
inline TriangleClass classify_triangle(const HierGraphView& v, const Word& x, const Word& y,
                                       const Word& z) {
	detail::require_clustered(v);
	if (!v.is_edge(x, y) || !v.is_edge(x, z) || !v.is_edge(y, z))
		throw std::invalid_argument("the three words do not form a triangle");
	HierGraphView plain(*v.base, v.level, Variant::simple);
	bool xy = plain.is_edge(x, y), xz = plain.is_edge(x, z), yz = plain.is_edge(y, z);
	if (xy + xz + yz != 2) return TriangleClass::irregular;
	return yz ? TriangleClass::regular_two : TriangleClass::regular_one;
}

struct TriangleCounts {
	long long reg1 = 0, reg2 = 0, irregular = 0;
	long long total() const { return reg1 + reg2 + irregular; }
};

// Closed forms: the per-class base counts scale with S(x) for regular
// triangles and carry over unchanged for irregular ones.
inline TriangleCounts triangle_counts(const HierGraphView& v, const Word& x) {
	detail::require_clustered(v);
	const BaseGraph& g = *v.base;
	TriangleCensus census = base_triangle_census(g);
	const auto& base = census.vertex[x.back()];
	long long s = s_value(x, g);
	return {s * base.reg1, s * base.reg2, base.irregular};
}

// Local clustering coefficient by the closed form
//   C_x = (2 reg(x_n) S(x) + 2 irr(x_n)) / (D (D - 1)),  D = clustered degree.
// Vertices of clustered degree < 2 get 0.
inline double local_clustering(const HierGraphView& v, const Word& x) {
	detail::require_clustered(v);
	const BaseGraph& g = *v.base;
	TriangleCensus census = base_triangle_census(g);
	const auto& base = census.vertex[x.back()];
	long long d = degree_formula(x, g, Variant::clustered);
	if (d < 2) return 0.0;
	long long reg = base.reg1 + base.reg2;
	long long num = 2 * (reg * s_value(x, g) + base.irregular);
	return static_cast<double>(num) / (static_cast<double>(d) * static_cast<double>(d - 1));
}

// Direct definition: fraction of neighbor pairs that are themselves adjacent.
inline double local_clustering_direct(const HierGraphView& v, const Word& x) {
	detail::require_clustered(v);
	auto nb = v.neighbors(x);
	if (nb.size() < 2) return 0.0;
	long long links = 0;
	for (size_t i = 0; i < nb.size(); ++i)
		for (size_t j = i + 1; j < nb.size(); ++j)
			if (v.is_edge(nb[i], nb[j])) ++links;
	return 2.0 * static_cast<double>(links) /
	       (static_cast<double>(nb.size()) * static_cast<double>(nb.size() - 1));
}

struct ClusteringStats {
	double mean = 0.0;
	double lower_bound = 0.0;  // 2 n1 n2 Cmin / N^2
	double upper_bound = 0.0;  // average clustering of the extended base
	long long count = 0;
};

namespace detail {

inline void fill_clustering_bounds(const BaseGraph& g, ClusteringStats& st) {
	TriangleCensus census = base_triangle_census(g);
	double N = g.num_vertices;
	st.lower_bound = 2.0 * g.n1() * g.n2() * census.c_min_hat / (N * N);
	st.upper_bound = census.c_bar_hat;
}

// per-word closed form with the census precomputed
inline double closed_clustering(const BaseGraph& g, const TriangleCensus& census, const Word& x) {
	const auto& base = census.vertex[x.back()];
	long long d = s_value(x, g) * g.degree(x.back()) +
	              (g.degree_hat(x.back()) - g.degree(x.back()));
	if (d < 2) return 0.0;
	long long num = 2 * ((base.reg1 + base.reg2) * s_value(x, g) + base.irregular);
	return static_cast<double>(num) / (static_cast<double>(d) * static_cast<double>(d - 1));
}

}  // namespace detail

// Exact mean of the local clustering coefficient over all level-n words,
// with the bounds of the clustered model attached.
inline ClusteringStats average_clustering_exact(const HierGraphView& v,
                                                long long max_words = kDefaultMaxPairs) {
	detail::require_clustered(v);
	if (!check_property_r(*v.base))
		throw std::invalid_argument("average clustering requires Property R");
	const BaseGraph& g = *v.base;
	ClusteringStats st;
	detail::fill_clustering_bounds(g, st);
	TriangleCensus census = base_triangle_census(g);
	double sum = 0.0;
	for (const Word& x : all_words(g.num_vertices, v.level, max_words)) {
		sum += detail::closed_clustering(g, census, x);
		++st.count;
	}
	st.mean = sum / static_cast<double>(st.count);
	return st;
}

// Words drawn uniformly by independent uniform digits.
inline ClusteringStats average_clustering_sampled(const HierGraphView& v, long long samples,
                                                  uint64_t seed) {
	detail::require_clustered(v);
	if (samples < 1) throw std::invalid_argument("sample count must be >= 1");
	if (!check_property_r(*v.base))
		throw std::invalid_argument("average clustering requires Property R");
	const BaseGraph& g = *v.base;
	ClusteringStats st;
	detail::fill_clustering_bounds(g, st);
	TriangleCensus census = base_triangle_census(g);
	double sum = 0.0;
	for (long long s = 0; s < samples; ++s) {
		SplitMix64 rng(substream_seed(seed, static_cast<uint64_t>(s)));
		Word x(v.level);
		for (int i = 0; i < v.level; ++i) x[i] = uniform_digit(rng, g.num_vertices);
		sum += detail::closed_clustering(g, census, x);
		++st.count;
	}
	st.mean = sum / static_cast<double>(st.count);
	return st;
}

struct ClusteringEnvelope {
	double k1 = 0.0, k2 = 0.0;  // min and max of C_x * clustered degree
};

// Empirical witness that C_x stays within constant multiples of 1/degree.
inline ClusteringEnvelope clustering_envelope(const HierGraphView& v,
                                              const std::vector<Word>& sample) {
	detail::require_clustered(v);
	if (sample.empty()) throw std::invalid_argument("envelope needs a non-empty sample");
	const BaseGraph& g = *v.base;
	TriangleCensus census = base_triangle_census(g);
	ClusteringEnvelope env;
	bool first = true;
	for (const Word& x : sample) {
		double val = detail::closed_clustering(g, census, x) *
		             static_cast<double>(degree_formula(x, g, Variant::clustered));
		if (first || val < env.k1) env.k1 = val;
		if (first || val > env.k2) env.k2 = val;
		first = false;
	}
	return env;
}

}  // namespace hsfg
