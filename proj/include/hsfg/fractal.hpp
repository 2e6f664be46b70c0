#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hsfg/hier_graph.hpp"

namespace hsfg {

// The directed graph behind the self-similar structure of the adjacency
// embedding. Vertices are coordinate pairs of base labels in three classes:
// diagonal pairs (z,z), edges read side-1-to-side-2, and edges read
// side-2-to-side-1. Each class is completely connected (loops included) and
// every diagonal vertex points into both edge classes; nothing leaves an edge
// class. Length-n walks are in bijection with the ordered level-n edge set.
enum class IfsClass { diag, v12, v21 };

struct IfsVertex {
	int x = 0, y = 0;
	IfsClass cls = IfsClass::diag;
};

struct IfsGraph {
	std::vector<IfsVertex> vertices;  // diag ascending, then v12, then v21, lexicographic

	bool has_edge(int from, int to) const {
		IfsClass a = vertices[from].cls, b = vertices[to].cls;
		return a == b || (a == IfsClass::diag);
	}
	long long edge_count() const {
		long long d = 0, u = 0, l = 0;
		for (const auto& v : vertices) {
			if (v.cls == IfsClass::diag) ++d;
			if (v.cls == IfsClass::v12) ++u;
			if (v.cls == IfsClass::v21) ++l;
		}
		return d * d + u * u + l * l + d * u + d * l;
	}
};

inline IfsGraph build_ifs_graph(const BaseGraph& g) {
	IfsGraph ifs;
	for (int z = 0; z < g.num_vertices; ++z) ifs.vertices.push_back({z, z, IfsClass::diag});
	std::vector<std::pair<int, int>> v12, v21;
	for (auto [a, b] : g.edges) {
		int one = g.side[a] == 1 ? a : b;
		int two = g.side[a] == 1 ? b : a;
		v12.emplace_back(one, two);
		v21.emplace_back(two, one);
	}
	std::sort(v12.begin(), v12.end());
	std::sort(v21.begin(), v21.end());
	for (auto [x, y] : v12) ifs.vertices.push_back({x, y, IfsClass::v12});
	for (auto [x, y] : v21) ifs.vertices.push_back({x, y, IfsClass::v21});
	return ifs;
}

// All directed walks on n vertices, in vertex-index order.
inline std::vector<std::vector<int>> enumerate_paths(const IfsGraph& ifs, int n,
                                                     long long max_paths = kDefaultMaxPairs) {
	if (n < 1) throw std::invalid_argument("path length must be >= 1");
	std::vector<std::vector<int>> out;
	std::vector<int> cur;
	auto extend = [&](auto&& self, int depth) -> void {
		if (depth == n) {
			if (static_cast<long long>(out.size()) >= max_paths)
				throw guard_error("path enumeration exceeds " + std::to_string(max_paths) +
				                  " walks; raise --max-pairs to allow it");
			out.push_back(cur);
			return;
		}
		for (int next = 0; next < static_cast<int>(ifs.vertices.size()); ++next) {
			if (!cur.empty() && !ifs.has_edge(cur.back(), next)) continue;
			cur.push_back(next);
			self(self, depth + 1);
			cur.pop_back();
		}
	};
	extend(extend, 0);
	return out;
}

// A walk spells an ordered pair of words coordinate-wise.
inline std::pair<Word, Word> path_words(const IfsGraph& ifs, const std::vector<int>& path) {
	Word x, y;
	for (int v : path) {
		x.push_back(ifs.vertices[v].x);
		y.push_back(ifs.vertices[v].y);
	}
	return {std::move(x), std::move(y)};
}

inline constexpr long long kDefaultMaxSide = 4096;

// Binary raster of the level-n adjacency embedding. Cell (ix, iy) is the
// level-n square with column word of rank ix and row word of rank iy.
// Raster convention: PBM row r counts from the top, so r = side - 1 - iy;
// columns follow ix directly.
struct FractalBitmap {
	int base_n = 0;  // N
	int level = 0;   // n
	long long side = 0;
	std::vector<uint8_t> bits;  // iy * side + ix

	bool get(long long ix, long long iy) const { return bits[iy * side + ix] != 0; }
	void set(long long ix, long long iy) { bits[iy * side + ix] = 1; }
	long long popcount() const {
		long long c = 0;
		for (uint8_t b : bits) c += b;
		return c;
	}
};

inline FractalBitmap lambda_bitmap(const BaseGraph& g, int n, Variant variant,
                                   long long max_side = kDefaultMaxSide) {
	if (variant == Variant::clustered)
		throw std::invalid_argument("the adjacency embedding is defined for looped and simple variants");
	FractalBitmap bm;
	bm.base_n = g.num_vertices;
	bm.level = n;
	bm.side = pow_ll(g.num_vertices, n);
	if (bm.side > max_side)
		throw guard_error("bitmap side " + std::to_string(bm.side) +
		                  " exceeds the raster budget; raise --max-side to allow it");
	bm.bits.assign(bm.side * bm.side, 0);
	HierGraphView view(g, n, variant);
	for (const Word& x : all_words(g.num_vertices, n, max_side)) {
		long long ix = word_index(x, g.num_vertices);
		for (const Word& y : view.neighbors(x)) bm.set(ix, word_index(y, g.num_vertices));
	}
	return bm;
}

// True iff every set level-(n+1) cell lies inside a set level-n cell.
inline bool nesting_check(const BaseGraph& g, int n, long long max_side = kDefaultMaxSide) {
	FractalBitmap coarse = lambda_bitmap(g, n, Variant::looped, max_side);
	FractalBitmap fine = lambda_bitmap(g, n + 1, Variant::looped, max_side);
	int N = g.num_vertices;
	for (long long iy = 0; iy < fine.side; ++iy)
		for (long long ix = 0; ix < fine.side; ++ix)
			if (fine.get(ix, iy) && !coarse.get(ix / N, iy / N)) return false;
	return true;
}

struct HausdorffDims {
	double dim_lambda = 0.0;       // max{log|E|/log N, 1}
	double dim_off_diagonal = 0.0; // log|E|/log N
};

inline HausdorffDims hausdorff_dims(const BaseGraph& g) {
	if (g.edges.empty()) throw std::invalid_argument("dimension formula needs a non-empty edge set");
	double d = std::log(static_cast<double>(g.edges.size())) / std::log(static_cast<double>(g.num_vertices));
	return {std::max(d, 1.0), d};
}

// Number of level-n squares covered by walks staying in the side-1-to-side-2
// class; equals |E|^n since distinct walks land in distinct squares.
inline long long box_count_lambda12(const BaseGraph& g, int n,
                                    long long max_count = kDefaultMaxPairs) {
	IfsGraph ifs = build_ifs_graph(g);
	std::vector<int> v12;
	for (int i = 0; i < static_cast<int>(ifs.vertices.size()); ++i)
		if (ifs.vertices[i].cls == IfsClass::v12) v12.push_back(i);
	if (v12.empty()) return 0;
	double est = std::pow(static_cast<double>(v12.size()), n);
	if (est > static_cast<double>(max_count))
		throw guard_error("box count needs " + std::to_string(est) +
		                  " walks; raise --max-pairs to allow it");
	std::set<std::pair<long long, long long>> squares;
	std::vector<int> pick(n, 0);
	while (true) {
		Word x, y;
		for (int p = 0; p < n; ++p) {
			x.push_back(ifs.vertices[v12[pick[p]]].x);
			y.push_back(ifs.vertices[v12[pick[p]]].y);
		}
		squares.emplace(word_index(x, g.num_vertices), word_index(y, g.num_vertices));
		int p = n - 1;
		for (; p >= 0; --p) {
			if (++pick[p] < static_cast<int>(v12.size())) break;
			pick[p] = 0;
		}
		if (p < 0) break;
	}
	return static_cast<long long>(squares.size());
}

// Raster of the system relabeled by a permutation of the base labels.
// Satisfies bit_pi(x, y) == bit(pi^-1 x, pi^-1 y) applied digit-wise.
inline FractalBitmap permuted_bitmap(const BaseGraph& g, int n, const std::vector<int>& pi,
                                     Variant variant = Variant::looped,
                                     long long max_side = kDefaultMaxSide) {
	int N = g.num_vertices;
	if (static_cast<int>(pi.size()) != N)
		throw std::invalid_argument("permutation must list all base labels");
	std::vector<bool> seen(N, false);
	for (int v : pi) {
		if (v < 0 || v >= N || seen[v]) throw std::invalid_argument("not a permutation of the base labels");
		seen[v] = true;
	}
	std::vector<int> v1;
	for (int v : g.v1) v1.push_back(pi[v]);
	std::vector<std::pair<int, int>> edges, re;
	for (auto [a, b] : g.edges) edges.emplace_back(pi[a], pi[b]);
	for (auto [a, b] : g.re_edges) re.emplace_back(pi[a], pi[b]);
	BaseGraph relabeled = make_base_graph(N, v1, edges, re);
	return lambda_bitmap(relabeled, n, variant, max_side);
}

// ASCII portable bitmap, `1` = cell of the embedding (black). The header
// comment records the base-graph hash, level, variant and raster convention.
inline void write_pbm(const FractalBitmap& bm, std::ostream& out, uint64_t base_hash,
                      Variant variant) {
	out << "P1\n";
	char hex[17];
	std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(base_hash));
	out << "# base=" << hex << " n=" << bm.level << " variant=" << variant_name(variant)
	    << " rows=y-top-down cols=x\n";
	out << bm.side << " " << bm.side << "\n";
	for (long long r = 0; r < bm.side; ++r) {
		long long iy = bm.side - 1 - r;
		for (long long ix = 0; ix < bm.side; ++ix) {
			out << (bm.get(ix, iy) ? '1' : '0');
			if ((ix + 1) % 64 == 0 && ix + 1 < bm.side) out << "\n";
		}
		out << "\n";
	}
	if (!out) throw std::runtime_error("bitmap export failed while writing");
}

}  // namespace hsfg
