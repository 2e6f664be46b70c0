#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hsfg {

// Bipartite seed graph on {0..N-1}: sides V1/V2, edge set E (one endpoint on
// each side) and an optional extra edge set RE that may join same-side
// vertices. RE and E are disjoint. Immutable after construction; every graph
// in the generated sequence derives from it.
struct BaseGraph {
	int num_vertices = 0;                     // N
	std::vector<int> side;                    // per vertex: 1 or 2
	std::vector<std::vector<int>> adj;        // neighbors in E, ascending
	std::vector<std::vector<int>> re_adj;     // neighbors in RE, ascending
	std::vector<int> v1, v2;                  // labels per side, ascending
	std::vector<std::pair<int, int>> edges;     // canonical (a<b), sorted
	std::vector<std::pair<int, int>> re_edges;  // canonical (a<b), sorted
	int diam = 0;          // max finite graph distance in E
	bool connected = false;

	int n1() const { return static_cast<int>(v1.size()); }
	int n2() const { return static_cast<int>(v2.size()); }
	int degree(int v) const { return static_cast<int>(adj[v].size()); }
	int degree_hat(int v) const {
		return static_cast<int>(adj[v].size() + re_adj[v].size());
	}
	int min_degree() const {
		int d = num_vertices == 0 ? 0 : degree(0);
		for (int v = 1; v < num_vertices; ++v) d = std::min(d, degree(v));
		return d;
	}
	bool has_edge(int a, int b) const {
		return std::binary_search(adj[a].begin(), adj[a].end(), b);
	}
	bool has_re_edge(int a, int b) const {
		return std::binary_search(re_adj[a].begin(), re_adj[a].end(), b);
	}
};

// Validates and assembles a BaseGraph from raw parts. Throws
// std::invalid_argument with a description of the first violation.
inline BaseGraph make_base_graph(int n, const std::vector<int>& v1_labels,
                                 const std::vector<std::pair<int, int>>& edge_list,
                                 const std::vector<std::pair<int, int>>& re_list = {}) {
	if (n < 2) throw std::invalid_argument("base graph needs at least 2 vertices");
	BaseGraph g;
	g.num_vertices = n;
	g.side.assign(n, 2);
	for (int v : v1_labels) {
		if (v < 0 || v >= n) throw std::invalid_argument("V1 vertex out of range: " + std::to_string(v));
		if (g.side[v] == 1) throw std::invalid_argument("duplicate V1 vertex: " + std::to_string(v));
		g.side[v] = 1;
	}
	for (int v = 0; v < n; ++v) (g.side[v] == 1 ? g.v1 : g.v2).push_back(v);
	if (g.v1.empty() || g.v2.empty())
		throw std::invalid_argument("both V1 and V2 must be non-empty");

	g.adj.assign(n, {});
	g.re_adj.assign(n, {});
	auto canon = [n](std::pair<int, int> e, const char* what) {
		auto [a, b] = e;
		if (a < 0 || a >= n || b < 0 || b >= n)
			throw std::invalid_argument(std::string(what) + " vertex out of range: " +
			                            std::to_string(a) + "-" + std::to_string(b));
		if (a == b) throw std::invalid_argument(std::string(what) + " is a loop: " + std::to_string(a));
		return std::make_pair(std::min(a, b), std::max(a, b));
	};
	for (auto e : edge_list) {
		auto [a, b] = canon(e, "edge");
		if (g.side[a] == g.side[b])
			throw std::invalid_argument("edge " + std::to_string(a) + "-" + std::to_string(b) +
			                            " joins two V" + std::to_string(g.side[a]) + " vertices");
		if (std::find(g.edges.begin(), g.edges.end(), std::make_pair(a, b)) != g.edges.end())
			throw std::invalid_argument("duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
		g.edges.emplace_back(a, b);
	}
	for (auto e : re_list) {
		auto [a, b] = canon(e, "RE edge");
		if (std::find(g.edges.begin(), g.edges.end(), std::make_pair(a, b)) != g.edges.end())
			throw std::invalid_argument("RE edge " + std::to_string(a) + "-" + std::to_string(b) +
			                            " already present in E");
		if (std::find(g.re_edges.begin(), g.re_edges.end(), std::make_pair(a, b)) != g.re_edges.end())
			throw std::invalid_argument("duplicate RE edge " + std::to_string(a) + "-" + std::to_string(b));
		g.re_edges.emplace_back(a, b);
	}
	std::sort(g.edges.begin(), g.edges.end());
	std::sort(g.re_edges.begin(), g.re_edges.end());
	for (auto [a, b] : g.edges) {
		g.adj[a].push_back(b);
		g.adj[b].push_back(a);
	}
	for (auto [a, b] : g.re_edges) {
		g.re_adj[a].push_back(b);
		g.re_adj[b].push_back(a);
	}
	for (auto& l : g.adj) std::sort(l.begin(), l.end());
	for (auto& l : g.re_adj) std::sort(l.begin(), l.end());

	// Diameter = max finite distance; connectivity via BFS from vertex 0.
	g.diam = 0;
	std::vector<int> dist(n);
	for (int s = 0; s < n; ++s) {
		std::fill(dist.begin(), dist.end(), -1);
		dist[s] = 0;
		std::queue<int> q;
		q.push(s);
		int reached = 1;
		while (!q.empty()) {
			int u = q.front();
			q.pop();
			for (int w : g.adj[u])
				if (dist[w] < 0) {
					dist[w] = dist[u] + 1;
					g.diam = std::max(g.diam, dist[w]);
					q.push(w);
					++reached;
				}
		}
		if (s == 0) g.connected = (reached == n);
	}
	return g;
}

namespace detail {

inline std::vector<std::string> tokens_of(std::string_view line) {
	std::vector<std::string> out;
	std::string cur;
	for (char c : line) {
		if (std::isspace(static_cast<unsigned char>(c))) {
			if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
		} else {
			cur.push_back(c);
		}
	}
	if (!cur.empty()) out.push_back(std::move(cur));
	return out;
}

inline int parse_int(const std::string& t) {
	size_t pos = 0;
	int v;
	try {
		v = std::stoi(t, &pos);
	} catch (const std::exception&) {
		throw std::invalid_argument("expected integer, got '" + t + "'");
	}
	if (pos != t.size()) throw std::invalid_argument("expected integer, got '" + t + "'");
	return v;
}

inline std::pair<int, int> parse_edge_token(const std::string& t) {
	auto dash = t.find('-');
	if (dash == std::string::npos || dash == 0 || dash + 1 == t.size())
		throw std::invalid_argument("malformed edge token '" + t + "'");
	return {parse_int(t.substr(0, dash)), parse_int(t.substr(dash + 1))};
}

}  // namespace detail

// Line-oriented base-graph format: `N <int>`, `V1 <ints...>`, `V2 <ints...>`,
// `E <a-b ...>`, then optional `RE <a-b ...>`, in that order. Lines starting
// with `#` and blank lines are ignored.
inline BaseGraph parse_base_graph(std::string_view text) {
	std::vector<std::vector<std::string>> records;
	size_t start = 0;
	while (start <= text.size()) {
		size_t end = text.find('\n', start);
		if (end == std::string_view::npos) end = text.size();
		std::string_view line = text.substr(start, end - start);
		start = end + 1;
		auto toks = detail::tokens_of(line);
		if (toks.empty() || toks[0][0] == '#') continue;
		records.push_back(std::move(toks));
	}
	static const char* order[] = {"N", "V1", "V2", "E", "RE"};
	if (records.size() < 4 || records.size() > 5)
		throw std::invalid_argument("expected records N, V1, V2, E and optionally RE");
	for (size_t i = 0; i < records.size(); ++i)
		if (records[i][0] != order[i])
			throw std::invalid_argument("expected record '" + std::string(order[i]) +
			                            "', got '" + records[i][0] + "'");
	if (records[0].size() != 2) throw std::invalid_argument("record N takes exactly one integer");
	int n = detail::parse_int(records[0][1]);
	std::vector<int> v1;
	for (size_t i = 1; i < records[1].size(); ++i) v1.push_back(detail::parse_int(records[1][i]));
	std::vector<int> v2;
	for (size_t i = 1; i < records[2].size(); ++i) v2.push_back(detail::parse_int(records[2][i]));
	std::vector<std::pair<int, int>> edges, re;
	for (size_t i = 1; i < records[3].size(); ++i) edges.push_back(detail::parse_edge_token(records[3][i]));
	if (records.size() == 5)
		for (size_t i = 1; i < records[4].size(); ++i) re.push_back(detail::parse_edge_token(records[4][i]));

	BaseGraph g = make_base_graph(n, v1, edges, re);
	// V2 is implied by V1 but the file states it; make sure they agree.
	std::sort(v2.begin(), v2.end());
	if (g.v2 != v2)
		throw std::invalid_argument("V2 record does not match the complement of V1");
	return g;
}

// Canonical form: V1/V2 ascending, edges as a<b in lexicographic order.
// parse(serialize(g)) == g byte-for-byte on the canonical form.
inline std::string serialize_base_graph(const BaseGraph& g) {
	std::ostringstream out;
	out << "N " << g.num_vertices << "\n";
	out << "V1";
	for (int v : g.v1) out << " " << v;
	out << "\nV2";
	for (int v : g.v2) out << " " << v;
	out << "\nE";
	for (auto [a, b] : g.edges) out << " " << a << "-" << b;
	out << "\n";
	if (!g.re_edges.empty()) {
		out << "RE";
		for (auto [a, b] : g.re_edges) out << " " << a << "-" << b;
		out << "\n";
	}
	return out.str();
}

// FNV-1a over the canonical serialization; stable across platforms.
inline uint64_t base_graph_hash(const BaseGraph& g) {
	uint64_t h = 0xcbf29ce484222325ULL;
	for (unsigned char c : serialize_base_graph(g)) {
		h ^= c;
		h *= 0x100000001b3ULL;
	}
	return h;
}

struct RegularityReport {
	int d1 = 0;  // common degree on V1 (degree of the smallest V1 label if not common)
	int d2 = 0;  // max degree on V2
	bool holds = false;
};

// Regularity check: every V1 vertex has the same degree d1 and d2 <= d1-1.
inline RegularityReport check_regularity_a1(const BaseGraph& g) {
	RegularityReport r;
	r.d1 = g.degree(g.v1.front());
	bool uniform = true;
	for (int v : g.v1) uniform = uniform && g.degree(v) == r.d1;
	r.d2 = 0;
	for (int v : g.v2) r.d2 = std::max(r.d2, g.degree(v));
	r.holds = uniform && r.d2 <= r.d1 - 1;
	return r;
}

namespace detail {

// Triangles of the extended graph containing x, as sorted neighbor pairs.
inline std::vector<std::pair<int, int>> hat_triangles_at(const BaseGraph& g, int x) {
	std::vector<int> nb;
	nb.insert(nb.end(), g.adj[x].begin(), g.adj[x].end());
	nb.insert(nb.end(), g.re_adj[x].begin(), g.re_adj[x].end());
	std::sort(nb.begin(), nb.end());
	std::vector<std::pair<int, int>> out;
	for (size_t i = 0; i < nb.size(); ++i)
		for (size_t j = i + 1; j < nb.size(); ++j)
			if (g.has_edge(nb[i], nb[j]) || g.has_re_edge(nb[i], nb[j]))
				out.emplace_back(nb[i], nb[j]);
	return out;
}

}  // namespace detail

// True iff every vertex sits in a triangle of the extended graph with exactly
// two edges from E and one from RE.
inline bool check_property_r(const BaseGraph& g) {
	for (int x = 0; x < g.num_vertices; ++x) {
		bool ok = false;
		for (auto [y, z] : detail::hat_triangles_at(g, x)) {
			int in_e = g.has_edge(x, y) + g.has_edge(x, z) + g.has_edge(y, z);
			if (in_e == 2) {
				ok = true;
				break;
			}
		}
		if (!ok) return false;
	}
	return true;
}

// Per-vertex triangle classes of the extended base graph. A triangle is
// regular iff exactly two of its edges are in E; type 1 iff the anchor vertex
// is not an endpoint of the RE edge, type 2 iff it is. All other triangles
// are irregular.
struct TriangleCensus {
	struct PerVertex {
		long long reg1 = 0, reg2 = 0, irregular = 0;
		double clustering = 0.0;  // 0 by convention when degree_hat < 2
		long long total() const { return reg1 + reg2 + irregular; }
	};
	std::vector<PerVertex> vertex;
	double c_min_hat = 0.0;  // min local clustering over all vertices
	double c_bar_hat = 0.0;  // average local clustering
};

inline TriangleCensus base_triangle_census(const BaseGraph& g) {
	TriangleCensus census;
	census.vertex.resize(g.num_vertices);
	double sum = 0.0, minc = 2.0;
	for (int x = 0; x < g.num_vertices; ++x) {
		auto& pv = census.vertex[x];
		for (auto [y, z] : detail::hat_triangles_at(g, x)) {
			int xy = g.has_edge(x, y), xz = g.has_edge(x, z), yz = g.has_edge(y, z);
			if (xy + xz + yz == 2) {
				// exactly one of the three edges comes from RE
				bool x_on_re = (!xy) || (!xz);
				(x_on_re ? pv.reg2 : pv.reg1)++;
			} else {
				pv.irregular++;
			}
		}
		long long dh = g.degree_hat(x);
		pv.clustering = dh < 2 ? 0.0 : 2.0 * static_cast<double>(pv.total()) / (static_cast<double>(dh) * (dh - 1));
		sum += pv.clustering;
		minc = std::min(minc, pv.clustering);
	}
	census.c_min_hat = g.num_vertices ? minc : 0.0;
	census.c_bar_hat = g.num_vertices ? sum / g.num_vertices : 0.0;
	return census;
}

}  // namespace hsfg
