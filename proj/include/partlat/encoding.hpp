// Copyright 2026 The partlat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PARTLAT_ENCODING_HPP_
#define PARTLAT_ENCODING_HPP_

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "partlat/partition.hpp"

namespace partlat {

// Padded vector form: blocks ordered by least element, members ascending and
// 1-indexed, each block closed by 0, then -1 up to pad_to entries.
inline std::size_t encoded_length(const Partition& p) { return p.size() + p.block_count(); }

inline std::vector<int> encode_canonical(const Partition& p, std::size_t pad_to) {
  if (pad_to < encoded_length(p))
    throw CapacityError("pad_to " + std::to_string(pad_to) + " below required length " +
                        std::to_string(encoded_length(p)));
  std::vector<int> out;
  out.reserve(pad_to);
  for (const auto& b : p.blocks()) {
    for (int x : b) out.push_back(x + 1);
    out.push_back(0);
  }
  out.resize(pad_to, -1);
  return out;
}

inline std::vector<int> encode_canonical(const Partition& p) {
  return encode_canonical(p, 2 * p.size() + 1);
}

inline Partition decode_canonical(const std::vector<int>& v) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur;
  std::size_t n = 0;
  bool padding = false;
  for (int x : v) {
    if (x == -1) {
      padding = true;
      continue;
    }
    if (padding) throw ArgumentError("entry after padding");
    if (x == 0) {
      if (cur.empty()) throw ArgumentError("empty block");
      blocks.push_back(cur);
      cur.clear();
    } else if (x > 0) {
      cur.push_back(x - 1);
      ++n;
    } else {
      throw ArgumentError("negative entry other than -1");
    }
  }
  if (!cur.empty()) throw ArgumentError("unterminated block");
  std::vector<bool> seen(n, false);
  for (const auto& b : blocks)
    for (int x : b) {
      if (static_cast<std::size_t>(x) >= n || seen[x]) throw ArgumentError("elements are not 1..n");
      seen[x] = true;
    }
  return Partition::from_blocks(n, blocks);
}

inline std::string format_vector(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

inline std::vector<int> parse_vector(std::string_view text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in{std::string(text)};
  while (std::getline(in, tok, ',')) {
    std::size_t a = tok.find_first_not_of(" \t()");
    std::size_t b = tok.find_last_not_of(" \t()");
    if (a == std::string::npos) continue;
    try {
      out.push_back(std::stoi(tok.substr(a, b - a + 1)));
    } catch (const std::exception&) {
      throw ArgumentError("bad vector entry '" + tok + "'");
    }
  }
  return out;
}

// Compact restricted growth string, one character per element: 0-9 then a-z.
inline std::string to_rgs_string(const Partition& p) {
  static constexpr std::string_view digits = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ@#";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += digits[p.block_of(i)];
  return s;
}

inline Partition from_rgs_string(std::string_view s) {
  std::vector<int> lab;
  for (char ch : s) {
    int v;
    if (ch >= '0' && ch <= '9')
      v = ch - '0';
    else if (ch >= 'a' && ch <= 'z')
      v = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'Z')
      v = ch - 'A' + 36;
    else if (ch == '@')
      v = 62;
    else if (ch == '#')
      v = 63;
    else
      throw ArgumentError(std::string("bad RGS character '") + ch + "'");
    lab.push_back(v);
  }
  int mx = -1;
  for (int v : lab) {
    if (v > mx + 1) throw ArgumentError("not a restricted growth string");
    mx = std::max(mx, v);
  }
  return Partition::from_labels(std::span<const int>(lab));
}

// "{0,1}{2}" style, 0-indexed.
inline std::string to_block_string(const Partition& p) {
  std::string s;
  for (const auto& b : p.blocks()) {
    s += '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(b[i]);
    }
    s += '}';
  }
  return s;
}

// Parses "{3,5},{0,4,2,6},{1,7}" (0-indexed); missing elements are singletons.
inline Partition parse_block_string(std::size_t n, std::string_view text) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur;
  std::string num;
  bool open = false;
  auto flush = [&] {
    if (!num.empty()) {
      cur.push_back(std::stoi(num));
      num.clear();
    }
  };
  for (char ch : text) {
    if (ch == '{') {
      if (open) throw ArgumentError("nested block");
      open = true;
    } else if (ch == '}') {
      if (!open) throw ArgumentError("unbalanced block");
      flush();
      blocks.push_back(cur);
      cur.clear();
      open = false;
    } else if (ch >= '0' && ch <= '9') {
      if (!open) throw ArgumentError("element outside a block");
      num += ch;
    } else if (ch == ',' || ch == ' ') {
      flush();
    } else {
      throw ArgumentError(std::string("unexpected character '") + ch + "'");
    }
  }
  if (open) throw ArgumentError("unterminated block");
  return Partition::from_blocks(n, blocks);
}

}  // namespace partlat

#endif  // PARTLAT_ENCODING_HPP_
