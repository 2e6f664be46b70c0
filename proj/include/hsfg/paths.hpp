#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <queue>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hsfg/hier_graph.hpp"
#include "hsfg/rng.hpp"

namespace hsfg {

// A fixed base-graph neighbor for every base vertex; applied digit-wise it
// flips the side of a one-sided word while staying edge-connected.
struct PMap {
	std::vector<int> to;
	int operator()(int v) const { return to[v]; }
	Word operator()(const Word& w) const {
		Word out(w);
		for (int& d : out) d = to[d];
		return out;
	}
};

inline PMap choose_p_map(const BaseGraph& g) {
	PMap p;
	for (int v = 0; v < g.num_vertices; ++v) {
		if (g.adj[v].empty())
			throw std::invalid_argument("vertex " + std::to_string(v) + " is isolated; no p-map exists");
		p.to.push_back(g.adj[v].front());  // smallest-labeled neighbor
	}
	return p;
}

struct PathReport {
	std::vector<Word> vertices;  // consecutive entries are level-n edges
	long long length = 0;        // edge count
	long long lower_bound = 0;   // r + q - 1
	long long upper_bound = 0;   // r + q + Diam(G) - 2
};

namespace detail {

// Shortest connector between two one-sided words of equal length under the
// coordinate-wise edge rule (every digit moves along a base edge each step).
// BFS over one-sided words only; with a connected base the distance is at
// most Diam(G).
inline std::vector<Word> uniform_connector(const BaseGraph& g, const Word& from, const Word& to,
                                           long long max_states = 1 << 22) {
	if (from == to) return {from};
	std::map<Word, Word> parent;
	parent[from] = {};
	std::queue<Word> q;
	q.push(from);
	long long states = 1;
	while (!q.empty()) {
		Word u = q.front();
		q.pop();
		// coordinate-wise product of base neighbor lists
		std::vector<int> pick(u.size(), 0);
		bool alive = true;
		for (int d : u) alive = alive && !g.adj[d].empty();
		while (alive) {
			Word w(u.size());
			for (size_t p = 0; p < u.size(); ++p) w[p] = g.adj[u[p]][pick[p]];
			if (!parent.count(w)) {
				parent[w] = u;
				if (w == to) {
					std::vector<Word> path{w};
					while (path.back() != from) path.push_back(parent[path.back()]);
					std::reverse(path.begin(), path.end());
					return path;
				}
				if (++states > max_states)
					throw guard_error("connector search exceeds its state budget; raise --max-pairs");
				q.push(std::move(w));
			}
			int p = static_cast<int>(u.size()) - 1;
			for (; p >= 0; --p) {
				if (++pick[p] < static_cast<int>(g.adj[u[p]].size())) break;
				pick[p] = 0;
			}
			if (p < 0) break;
		}
	}
	throw std::invalid_argument("connector not found; the base graph must be connected");
}

}  // namespace detail

// Explicit short path between two level-n words: peel the trailing block of
// each word with the p-map until one block remains, then bridge the two
// one-sided postfixes with a BFS connector. The result is a valid walk whose
// length lies in [r+q-1, r+q+Diam(G)-2].
inline PathReport construct_short_path(const BaseGraph& g, int n, const Word& x, const Word& y,
                                       const PMap& p) {
	if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
		throw std::invalid_argument("word length does not match the level");
	if (!g.connected)
		throw std::invalid_argument("path construction requires a connected base graph");
	PathReport rep;
	if (x == y) {
		rep.vertices = {x};
		return rep;
	}
	auto split = split_common_prefix(x, y);
	Word prefix(x.begin(), x.begin() + split.prefix_len);
	auto xb = block_decompose(split.x_tail, g);
	auto yb = block_decompose(split.y_tail, g);
	long long r = static_cast<long long>(xb.size()), q = static_cast<long long>(yb.size());
	rep.lower_bound = r + q - 1;
	rep.upper_bound = r + q + g.diam - 2;

	// half-path from a word: tails after prefix, peeling one block per step
	auto half_path = [&](const std::vector<Block>& blocks) {
		std::vector<Word> tails;
		Word tail = blocks.back().digits;
		Word fixed;  // concatenation of blocks 0..k-1
		for (size_t i = 0; i + 1 < blocks.size(); ++i)
			fixed.insert(fixed.end(), blocks[i].digits.begin(), blocks[i].digits.end());
		Word cur = fixed;
		cur.insert(cur.end(), tail.begin(), tail.end());
		tails.push_back(cur);
		for (size_t step = blocks.size(); step-- > 1;) {
			// merge block step-1 with the p-image of the running tail
			Word merged = blocks[step - 1].digits;
			Word img = p(tail);
			merged.insert(merged.end(), img.begin(), img.end());
			tail = merged;
			fixed.clear();
			for (size_t i = 0; i + 1 < step; ++i)
				fixed.insert(fixed.end(), blocks[i].digits.begin(), blocks[i].digits.end());
			cur = fixed;
			cur.insert(cur.end(), tail.begin(), tail.end());
			tails.push_back(cur);
		}
		return tails;  // blocks.size() entries; last one is one-sided
	};

	auto x_tails = half_path(xb);
	auto y_tails = half_path(yb);
	auto connector = detail::uniform_connector(g, x_tails.back(), y_tails.back());

	auto with_prefix = [&](const Word& tail) {
		Word w(prefix);
		w.insert(w.end(), tail.begin(), tail.end());
		return w;
	};
	for (const Word& t : x_tails) rep.vertices.push_back(with_prefix(t));
	for (size_t i = 1; i < connector.size(); ++i) rep.vertices.push_back(with_prefix(connector[i]));
	for (size_t i = y_tails.size() - 1; i-- > 0;) rep.vertices.push_back(with_prefix(y_tails[i]));
	rep.length = static_cast<long long>(rep.vertices.size()) - 1;
	return rep;
}

// Exact distance ignoring loops; -1 when unreachable.
inline long long bfs_distance(const HierGraphView& v, const Word& from, const Word& to,
                              long long max_words = kDefaultMaxPairs) {
	if (from == to) return 0;
	long long total = v.word_count();
	if (total > max_words)
		throw guard_error("BFS needs " + std::to_string(total) + " states; raise --max-pairs");
	int N = v.base->num_vertices;
	std::vector<long long> dist(total, -1);
	long long target = word_index(to, N);
	dist[word_index(from, N)] = 0;
	std::queue<long long> q;
	q.push(word_index(from, N));
	while (!q.empty()) {
		long long u = q.front();
		q.pop();
		Word uw = word_at_index(u, N, v.level);
		for (const Word& w : v.neighbors(uw)) {
			long long iw = word_index(w, N);
			if (iw == u || dist[iw] >= 0) continue;
			dist[iw] = dist[u] + 1;
			if (iw == target) return dist[iw];
			q.push(iw);
		}
	}
	return -1;
}

namespace detail {

// Distances from one source over the whole level, ignoring loops.
inline void bfs_all(const HierGraphView& v, long long src, std::vector<int>& dist) {
	int N = v.base->num_vertices;
	std::fill(dist.begin(), dist.end(), -1);
	dist[src] = 0;
	std::queue<long long> q;
	q.push(src);
	while (!q.empty()) {
		long long u = q.front();
		q.pop();
		Word uw = word_at_index(u, N, v.level);
		for (const Word& w : v.neighbors(uw)) {
			long long iw = word_index(w, N);
			if (iw == u || dist[iw] >= 0) continue;
			dist[iw] = dist[u] + 1;
			q.push(iw);
		}
	}
}

// Chunked source partition with in-order reduction; the outcome does not
// depend on the worker count.
template <typename Fn>
void over_sources(long long total, int threads, Fn per_source) {
	const long long grain = 64;
	long long chunks = (total + grain - 1) / grain;
	if (threads <= 1) {
		for (long long c = 0; c < chunks; ++c)
			for (long long s = c * grain; s < std::min(total, (c + 1) * grain); ++s) per_source(c, s);
		return;
	}
	std::vector<std::thread> pool;
	std::atomic<long long> next{0};
	for (int t = 0; t < threads; ++t)
		pool.emplace_back([&] {
			for (long long c = next++; c < chunks; c = next++)
				for (long long s = c * grain; s < std::min(total, (c + 1) * grain); ++s) per_source(c, s);
		});
	for (auto& th : pool) th.join();
}

}  // namespace detail

inline long long diameter(const HierGraphView& v, long long max_words = kDefaultMaxPairs,
                          int threads = 1) {
	if (!v.base->connected)
		throw std::invalid_argument("diameter requires a connected base graph");
	long long total = v.word_count();
	if (total > max_words)
		throw guard_error("diameter needs " + std::to_string(total) + " BFS runs; raise --max-pairs");
	long long chunks = (total + 63) / 64;
	std::vector<long long> chunk_max(chunks, 0);
	detail::over_sources(total, threads, [&](long long chunk, long long src) {
		thread_local std::vector<int> dist;
		dist.assign(total, -1);
		detail::bfs_all(v, src, dist);
		for (int d : dist) chunk_max[chunk] = std::max<long long>(chunk_max[chunk], d);
	});
	long long best = 0;
	for (long long m : chunk_max) best = std::max(best, m);
	return best;
}

struct DistanceStats {
	double mean = 0.0;
	double lower_bound = 0.0;            // 4 n1 n2 (n-1) / N^2
	double upper_bound = 0.0;            // N + 4 n1 n2 (n-1) / N^2
	double expected_blocks_formula = 0.0;  // 1 + (n - (1-N^-n)/(N-1) - 1) 2 n1 n2 / N^2
	double mean_blocks = 0.0;            // enumerated/sampled mean postfix block count
	long long pairs = 0;
};

namespace detail {

inline void fill_distance_bounds(const HierGraphView& v, DistanceStats& st) {
	const BaseGraph& g = *v.base;
	double N = g.num_vertices, n = v.level;
	double span = 4.0 * g.n1() * g.n2() * (n - 1) / (N * N);
	st.lower_bound = span;
	st.upper_bound = N + span;
	double mean_prefix = (1.0 - std::pow(N, -n)) / (N - 1.0);
	st.expected_blocks_formula = 1.0 + (n - mean_prefix - 1.0) * 2.0 * g.n1() * g.n2() / (N * N);
}

// Block count of the postfix of x after a common prefix of length k, via the
// indicator form 1 + #{side changes}; the empty postfix (k = n) counts as 1.
inline long long blocks_after_prefix(const BaseGraph& g, const Word& x, int k) {
	long long r = 1;
	for (size_t i = k + 1; i < x.size(); ++i)
		if (g.side[x[i]] != g.side[x[i - 1]]) ++r;
	return r;
}

}  // namespace detail

// Mean distance over all ordered pairs, including identical pairs at
// distance zero.
inline DistanceStats average_distance_exact(const HierGraphView& v,
                                            long long max_words = kDefaultMaxPairs,
                                            int threads = 1) {
	if (!v.base->connected)
		throw std::invalid_argument("average distance requires a connected base graph");
	long long total = v.word_count();
	if (total > 3'000'000'000LL || total * total > max_words)
		throw guard_error("average distance needs " + std::to_string(total) +
		                  "^2 pairs; raise --max-pairs");
	DistanceStats st;
	detail::fill_distance_bounds(v, st);
	st.pairs = total * total;
	long long chunks = (total + 63) / 64;
	std::vector<long long> dist_sum(chunks, 0), block_sum(chunks, 0);
	const BaseGraph& g = *v.base;
	int N = g.num_vertices;
	detail::over_sources(total, threads, [&](long long chunk, long long src) {
		thread_local std::vector<int> dist;
		dist.assign(total, -1);
		detail::bfs_all(v, src, dist);
		Word x = word_at_index(src, N, v.level);
		for (long long j = 0; j < total; ++j) {
			dist_sum[chunk] += dist[j];
			Word y = word_at_index(j, N, v.level);
			int k = 0;
			while (k < v.level && x[k] == y[k]) ++k;
			block_sum[chunk] += detail::blocks_after_prefix(g, x, k);
		}
	});
	long long d = 0, b = 0;
	for (long long c = 0; c < chunks; ++c) {
		d += dist_sum[c];
		b += block_sum[c];
	}
	st.mean = static_cast<double>(d) / static_cast<double>(st.pairs);
	st.mean_blocks = static_cast<double>(b) / static_cast<double>(st.pairs);
	return st;
}

// Seeded Monte Carlo estimate over uniformly chosen ordered pairs.
inline DistanceStats average_distance_sampled(const HierGraphView& v, long long samples,
                                              uint64_t seed,
                                              long long max_words = kDefaultMaxPairs) {
	if (samples < 1) throw std::invalid_argument("sample count must be >= 1");
	if (!v.base->connected)
		throw std::invalid_argument("average distance requires a connected base graph");
	long long total = v.word_count();
	if (total > max_words)
		throw guard_error("sampled distance needs " + std::to_string(total) +
		                  " BFS states; raise --max-pairs");
	DistanceStats st;
	detail::fill_distance_bounds(v, st);
	st.pairs = samples;
	const BaseGraph& g = *v.base;
	int N = g.num_vertices;
	long long dist_sum = 0, block_sum = 0;
	std::vector<int> dist(total);
	for (long long s = 0; s < samples; ++s) {
		SplitMix64 rng(substream_seed(seed, static_cast<uint64_t>(s)));
		Word x(v.level), y(v.level);
		for (int i = 0; i < v.level; ++i) x[i] = uniform_digit(rng, N);
		for (int i = 0; i < v.level; ++i) y[i] = uniform_digit(rng, N);
		detail::bfs_all(v, word_index(x, N), dist);
		dist_sum += dist[word_index(y, N)];
		int k = 0;
		while (k < v.level && x[k] == y[k]) ++k;
		block_sum += detail::blocks_after_prefix(g, x, k);
	}
	st.mean = static_cast<double>(dist_sum) / static_cast<double>(samples);
	st.mean_blocks = static_cast<double>(block_sum) / static_cast<double>(samples);
	return st;
}

}  // namespace hsfg
