#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hsfg/base_graph.hpp"

namespace hsfg {

// A vertex of the level-n graph: n digits over {0..N-1}, most significant
// (coarsest hierarchy level) first.
using Word = std::vector<int>;

enum class Variant { looped, simple, clustered };

inline const char* variant_name(Variant v) {
	switch (v) {
		case Variant::looped: return "looped";
		case Variant::simple: return "simple";
		default: return "clustered";
	}
}

inline Variant variant_from_name(std::string_view s) {
	if (s == "looped") return Variant::looped;
	if (s == "simple") return Variant::simple;
	if (s == "clustered") return Variant::clustered;
	throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

// Type of a word: 1 if all digits on side 1, 2 if all on side 2, 0 if mixed.
inline int typ(const Word& w, const BaseGraph& g) {
	if (w.empty()) throw std::invalid_argument("type of the empty word is undefined");
	int s = g.side[w.front()];
	for (int d : w)
		if (g.side[d] != s) return 0;
	return s;
}

struct PrefixSplit {
	int prefix_len = 0;
	Word x_tail, y_tail;  // first digits differ, or both empty when x == y
};

inline PrefixSplit split_common_prefix(const Word& x, const Word& y) {
	if (x.size() != y.size()) throw std::invalid_argument("words must have equal length");
	size_t k = 0;
	while (k < x.size() && x[k] == y[k]) ++k;
	PrefixSplit s;
	s.prefix_len = static_cast<int>(k);
	s.x_tail.assign(x.begin() + k, x.end());
	s.y_tail.assign(y.begin() + k, y.end());
	return s;
}

// Length of the longest suffix whose digits all lie on one side; always >= 1.
inline int ell(const Word& w, const BaseGraph& g) {
	if (w.empty()) throw std::invalid_argument("ell of the empty word is undefined");
	int s = g.side[w.back()];
	int len = 1;
	for (int i = static_cast<int>(w.size()) - 2; i >= 0 && g.side[w[i]] == s; --i) ++len;
	return len;
}

// S(w) = sum over r=0..ell-1 of the product deg(w_{n-1}) ... deg(w_{n-r}),
// with the empty product (r=0) equal to 1.
inline long long s_value(const Word& w, const BaseGraph& g) {
	int l = ell(w, g);
	long long s = 1, prod = 1;
	int n = static_cast<int>(w.size());
	for (int r = 1; r < l; ++r) {
		prod *= g.degree(w[n - 1 - r]);
		s += prod;
	}
	return s;
}

// Closed-form degree of a word at level n. A loop contributes +2.
inline long long degree_formula(const Word& w, const BaseGraph& g, Variant variant) {
	long long core = s_value(w, g) * g.degree(w.back());
	switch (variant) {
		case Variant::looped: return 2 + core;
		case Variant::simple: return core;
		default: return core + (g.degree_hat(w.back()) - g.degree(w.back()));
	}
}

struct Block {
	int type = 0;  // 1 or 2
	Word digits;
};

// Maximal same-side runs of a non-empty postfix; consecutive blocks alternate.
inline std::vector<Block> block_decompose(const Word& postfix, const BaseGraph& g) {
	if (postfix.empty()) throw std::invalid_argument("cannot decompose the empty word");
	std::vector<Block> blocks;
	for (int d : postfix) {
		int s = g.side[d];
		if (blocks.empty() || blocks.back().type != s) blocks.push_back({s, {}});
		blocks.back().digits.push_back(d);
	}
	return blocks;
}

inline int block_count(const Word& postfix, const BaseGraph& g) {
	if (postfix.empty()) return 0;
	int r = 1;
	for (size_t i = 1; i < postfix.size(); ++i)
		if (g.side[postfix[i]] != g.side[postfix[i - 1]]) ++r;
	return r;
}

// Text form: digits run together for N <= 10 ("012"), dot-separated otherwise.
inline std::string word_to_string(const Word& w, int base_n) {
	std::string out;
	for (size_t i = 0; i < w.size(); ++i) {
		if (base_n <= 10) {
			out += static_cast<char>('0' + w[i]);
		} else {
			if (i) out += '.';
			out += std::to_string(w[i]);
		}
	}
	return out;
}

inline Word word_from_string(std::string_view s, int base_n) {
	Word w;
	if (base_n <= 10) {
		for (char c : s) {
			if (c < '0' || c > '9') throw std::invalid_argument("bad digit in word");
			w.push_back(c - '0');
		}
	} else {
		std::string cur;
		auto flush = [&] {
			if (cur.empty()) throw std::invalid_argument("empty digit in word");
			w.push_back(detail::parse_int(cur));
			cur.clear();
		};
		for (char c : s) {
			if (c == '.')
				flush();
			else
				cur.push_back(c);
		}
		flush();
	}
	for (int d : w)
		if (d < 0 || d >= base_n) throw std::invalid_argument("word digit out of range");
	return w;
}

}  // namespace hsfg
