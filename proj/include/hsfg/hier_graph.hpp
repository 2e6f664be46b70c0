#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsfg/word.hpp"

namespace hsfg {

// Thrown when an enumeration would exceed its size budget. The message names
// the flag that raises the budget.
class guard_error : public std::runtime_error {
	using std::runtime_error::runtime_error;
};

// Saturating power: large results clamp instead of overflowing, so guard
// comparisons stay meaningful.
inline long long pow_ll(long long b, int e) {
	const long long cap = 1'000'000'000'000'000'000LL;
	long long r = 1;
	while (e-- > 0) {
		if (r > cap / b) return cap;
		r *= b;
	}
	return r;
}

inline constexpr long long kDefaultMaxPairs = 10'000'000;

// Words of length n in lexicographic order. Guarded: N^n entries.
inline std::vector<Word> all_words(int base_n, int n, long long max_words = kDefaultMaxPairs) {
	long long total = pow_ll(base_n, n);
	if (total > max_words)
		throw guard_error("word enumeration needs " + std::to_string(total) +
		                  " entries; raise --max-pairs to allow it");
	std::vector<Word> out;
	out.reserve(total);
	Word w(n, 0);
	for (long long i = 0; i < total; ++i) {
		out.push_back(w);
		for (int p = n - 1; p >= 0; --p) {
			if (++w[p] < base_n) break;
			w[p] = 0;
		}
	}
	return out;
}

// Rank of a word in lexicographic order (its N-adic index).
inline long long word_index(const Word& w, int base_n) {
	long long idx = 0;
	for (int d : w) idx = idx * base_n + d;
	return idx;
}

inline Word word_at_index(long long idx, int base_n, int n) {
	Word w(n);
	for (int p = n - 1; p >= 0; --p) {
		w[p] = static_cast<int>(idx % base_n);
		idx /= base_n;
	}
	return w;
}

// Lazy view of the level-n graph in one of three variants:
//   looped:    every word carries a loop, other edges by the postfix rule;
//   simple:    the same without loops;
//   clustered: simple plus RE edges between last-digit siblings.
// Vertex set is all of Sigma_n; it is never materialized. Edge queries are
// O(n). The view holds a pointer to the base graph and is freely shareable.
struct HierGraphView {
	const BaseGraph* base = nullptr;
	int level = 1;  // n >= 1
	Variant variant = Variant::looped;

	HierGraphView(const BaseGraph& g, int n, Variant v) : base(&g), level(n), variant(v) {
		if (n < 1) throw std::invalid_argument("level must be >= 1");
	}
	HierGraphView(BaseGraph&&, int, Variant) = delete;  // the view must not outlive the base

	long long word_count() const { return pow_ll(base->num_vertices, level); }

	// Postfix rule: beyond the common prefix both words are one-sided, on
	// opposite sides, and every coordinate pair is an edge of the base graph.
	bool is_edge(const Word& x, const Word& y) const {
		if (static_cast<int>(x.size()) != level || static_cast<int>(y.size()) != level)
			throw std::invalid_argument("word length does not match the view level");
		const BaseGraph& g = *base;
		int k = 0;
		while (k < level && x[k] == y[k]) ++k;
		if (k == level) return variant == Variant::looped;
		if (variant == Variant::clustered && k == level - 1 &&
		    g.has_re_edge(x[level - 1], y[level - 1]))
			return true;
		int sx = g.side[x[k]], sy = g.side[y[k]];
		if (sx == sy) return false;
		for (int i = k; i < level; ++i) {
			if (g.side[x[i]] != sx || g.side[y[i]] != sy) return false;
			if (!g.has_edge(x[i], y[i])) return false;
		}
		return true;
	}

	// All neighbors in lexicographic order. For depth j = 1..ell(x) the
	// neighbors replace the last j digits by coordinate-wise base-graph
	// neighbors; clustered adds RE siblings at the last digit; looped adds
	// the word itself.
	std::vector<Word> neighbors(const Word& x) const {
		if (static_cast<int>(x.size()) != level)
			throw std::invalid_argument("word length does not match the view level");
		const BaseGraph& g = *base;
		std::vector<Word> out;
		int l = ell(x, g);
		for (int j = 1; j <= l; ++j) {
			// Cartesian product of the neighbor lists of the last j digits.
			std::vector<int> pick(j, 0);
			bool alive = true;
			for (int p = 0; p < j && alive; ++p) alive = !g.adj[x[level - j + p]].empty();
			while (alive) {
				Word y(x);
				for (int p = 0; p < j; ++p) y[level - j + p] = g.adj[x[level - j + p]][pick[p]];
				out.push_back(std::move(y));
				int p = j - 1;
				for (; p >= 0; --p) {
					if (++pick[p] < static_cast<int>(g.adj[x[level - j + p]].size())) break;
					pick[p] = 0;
				}
				if (p < 0) break;
			}
		}
		if (variant == Variant::clustered)
			for (int z : g.re_adj[x[level - 1]]) {
				Word y(x);
				y[level - 1] = z;
				out.push_back(std::move(y));
			}
		if (variant == Variant::looped) out.push_back(x);
		std::sort(out.begin(), out.end());
		return out;
	}
};

struct EdgeCounts {
	long long loops = 0;
	long long nonloop = 0;  // undirected, each counted once
};

// Exact counts by full enumeration of unordered pairs.
inline EdgeCounts count_edges(const HierGraphView& v, long long max_pairs = kDefaultMaxPairs) {
	long long w = v.word_count();
	if (w > 3'000'000'000LL || w * (w + 1) / 2 > max_pairs)
		throw guard_error("edge count needs " + std::to_string(w) + "^2/2 pair checks; "
		                  "raise --max-pairs to allow it");
	auto words = all_words(v.base->num_vertices, v.level, max_pairs);
	EdgeCounts c;
	for (size_t i = 0; i < words.size(); ++i) {
		if (v.is_edge(words[i], words[i])) ++c.loops;
		for (size_t j = i + 1; j < words.size(); ++j)
			if (v.is_edge(words[i], words[j])) ++c.nonloop;
	}
	return c;
}

// One row per suffix length ell: the degree threshold t_ell and the tail mass
// above it. The closed-form tail (n1/N)^(ell+1) counts the dominant branch,
// words whose last ell+1 digits all lie on side 1; `tail_all_count`
// additionally includes side-2 words, which can exceed t_ell at small ell
// (the k0 threshold marks where that stops).
struct DegreeLawRow {
	int ell = 0;
	long long t_ell = 0;
	long long hd_count = 0;        // words with an all-side-1 suffix of length ell+1
	long long formula_count = 0;   // n1^(ell+1) * N^(n-ell-1)
	long long tail_all_count = 0;  // words with closed-form looped degree > t_ell
	double tail_formula = 0.0;     // (n1/N)^(ell+1)
	double tail_hd = 0.0;
	double tail_all = 0.0;
};

struct DegreeLawReport {
	double gamma_tilde = 0.0;  // log(N/n1)/log d1; the decay exponent is 1 + gamma_tilde
	double k0 = 0.0;           // max{(n+1) log d2 / log d1, log n / log d1}
	int d1 = 0, d2 = 0;
	std::vector<DegreeLawRow> rows;  // ell = 0..n-1
};

inline long long degree_threshold_t(int d1, int k) {
	// (d1^(k+1) - 1)/(d1 - 1) + 1, the looped degree at suffix length k
	long long num = pow_ll(d1, k + 1) - 1;
	return num / (d1 - 1) + 1;
}

inline double k0_threshold(const BaseGraph& g, int n) {
	auto a1 = check_regularity_a1(g);
	double logd1 = std::log(static_cast<double>(a1.d1));
	double left = a1.d2 <= 1 ? 0.0 : (n + 1) * std::log(static_cast<double>(a1.d2)) / logd1;
	return std::max(left, std::log(static_cast<double>(n)) / logd1);
}

inline DegreeLawReport degree_law(const HierGraphView& v, long long max_words = kDefaultMaxPairs) {
	const BaseGraph& g = *v.base;
	auto a1 = check_regularity_a1(g);
	if (!a1.holds)
		throw std::invalid_argument("degree law requires the regularity assumption (A1)");
	int n = v.level, N = g.num_vertices;
	DegreeLawReport rep;
	rep.d1 = a1.d1;
	rep.d2 = a1.d2;
	rep.gamma_tilde = std::log(static_cast<double>(N) / g.n1()) / std::log(static_cast<double>(a1.d1));
	rep.k0 = k0_threshold(g, n);
	auto words = all_words(N, n, max_words);
	double total = static_cast<double>(words.size());
	for (int l = 0; l < n; ++l) {
		DegreeLawRow row;
		row.ell = l;
		row.t_ell = degree_threshold_t(a1.d1, l);
		row.formula_count = pow_ll(g.n1(), l + 1) * pow_ll(N, n - l - 1);
		for (const Word& w : words) {
			bool hd = true;
			for (int i = n - l - 1; i < n; ++i) hd = hd && g.side[w[i]] == 1;
			if (hd) ++row.hd_count;
			if (degree_formula(w, g, Variant::looped) > row.t_ell) ++row.tail_all_count;
		}
		row.tail_formula = std::pow(static_cast<double>(g.n1()) / N, l + 1);
		row.tail_hd = row.hd_count / total;
		row.tail_all = row.tail_all_count / total;
		rep.rows.push_back(row);
	}
	return rep;
}

enum class ExportFormat { edge_list, dot };

// Streams the undirected edge set in lexicographic order, loops once as
// `w w`. Returns the number of edges written.
inline long long export_edges(const HierGraphView& v, std::ostream& out, ExportFormat fmt,
                              long long max_pairs = kDefaultMaxPairs) {
	int N = v.base->num_vertices;
	auto words = all_words(N, v.level, max_pairs);
	long long written = 0;
	if (fmt == ExportFormat::dot) out << "graph level" << v.level << " {\n";
	for (const Word& x : words) {
		for (const Word& y : v.neighbors(x)) {
			if (y < x) continue;
			auto xs = word_to_string(x, N), ys = word_to_string(y, N);
			if (fmt == ExportFormat::edge_list)
				out << xs << " " << ys << "\n";
			else
				out << "  \"" << xs << "\" -- \"" << ys << "\";\n";
			++written;
		}
	}
	if (fmt == ExportFormat::dot) out << "}\n";
	if (!out) throw std::runtime_error("edge export failed while writing");
	return written;
}

}  // namespace hsfg
