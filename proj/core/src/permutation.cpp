#include "pavstat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace pavstat {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const auto n = word_.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("Permutation: word is not a bijection on {1..n}");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("Permutation::identity: negative length");
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

Permutation Permutation::parse(std::string_view text) {
  const bool separated = std::any_of(text.begin(), text.end(), [](char c) {
    return c == ',' || c == ' ';
  });
  std::vector<int> word;
  if (!separated) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("Permutation::parse: unexpected character");
      }
      word.push_back(c - '0');
    }
    return Permutation(std::move(word));
  }
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ',' || text[i] == ' ') {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{}) {
      throw std::invalid_argument("Permutation::parse: malformed entry");
    }
    word.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Permutation(std::move(word));
}

std::string Permutation::to_string() const {
  const bool compact = size() <= 9;
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(word_[i]);
  }
  return out;
}

namespace {

// Place pattern entries one at a time; position j of the pattern goes to a
// position of sigma strictly after the one chosen for j - 1.
bool embed(std::span<const int> sigma, std::span<const int> pattern,
           std::vector<int>& chosen, std::size_t j, std::size_t start) {
  if (j == pattern.size()) return true;
  const std::size_t remaining = pattern.size() - j;
  for (std::size_t p = start; p + remaining <= sigma.size(); ++p) {
    bool consistent = true;
    for (std::size_t i = 0; i < j && consistent; ++i) {
      const int prev = sigma[static_cast<std::size_t>(chosen[i])];
      consistent = (pattern[i] < pattern[j]) == (prev < sigma[p]);
    }
    if (!consistent) continue;
    chosen[j] = static_cast<int>(p);
    if (embed(sigma, pattern, chosen, j + 1, p + 1)) return true;
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& sigma, const Permutation& pattern) {
  if (pattern.size() > sigma.size()) return false;
  std::vector<int> chosen(static_cast<std::size_t>(pattern.size()));
  return embed(sigma.word(), pattern.word(), chosen, 0, 0);
}

std::vector<int> descent_set(const Permutation& sigma) {
  std::vector<int> out;
  const auto w = sigma.word();
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

int des(const Permutation& sigma) {
  return static_cast<int>(descent_set(sigma).size());
}

int maj(const Permutation& sigma) {
  const auto d = descent_set(sigma);
  return std::accumulate(d.begin(), d.end(), 0);
}

int inv(const Permutation& sigma) {
  const auto w = sigma.word();
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) ++count;
    }
  }
  return count;
}

int lrm(const Permutation& sigma) {
  int count = 0;
  int best = 0;
  for (int v : sigma.word()) {
    if (v > best) {
      ++count;
      best = v;
    }
  }
  return count;
}

Permutation rotate180(const Permutation& sigma) {
  const auto w = sigma.word();
  const int n = sigma.size();
  std::vector<int> out(w.size());
  for (int i = 1; i <= n; ++i) {
    out[static_cast<std::size_t>(i - 1)] = n + 1 - w[static_cast<std::size_t>(n - i)];
  }
  return Permutation(std::move(out));
}

Permutation inflate(const Permutation& pi, std::span<const Permutation> parts) {
  if (static_cast<int>(parts.size()) != pi.size()) {
    throw std::invalid_argument("inflate: need exactly one part per entry of pi");
  }
  const auto m = parts.size();
  for (const auto& part : parts) {
    if (part.empty()) throw std::invalid_argument("inflate: parts must be nonempty");
  }
  // Block for the dot with value v sits above every block of smaller value.
  std::vector<int> size_by_value(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    size_by_value[static_cast<std::size_t>(pi.word()[i])] = parts[i].size();
  }
  std::vector<int> offset_by_value(m + 1, 0);
  for (std::size_t v = 2; v <= m; ++v) {
    offset_by_value[v] = offset_by_value[v - 1] + size_by_value[v - 1];
  }
  std::vector<int> word;
  for (std::size_t i = 0; i < m; ++i) {
    const int offset = offset_by_value[static_cast<std::size_t>(pi.word()[i])];
    for (int v : parts[i].word()) word.push_back(offset + v);
  }
  return Permutation(std::move(word));
}

std::vector<Permutation> avoiders_321(int n) {
  std::vector<Permutation> out;
  for_each_avoider(n, [&](std::span<const int> w, const WordStats&) {
    out.emplace_back(std::vector<int>(w.begin(), w.end()));
  });
  return out;
}

std::uint64_t count_avoiders_321(int n) {
  std::uint64_t count = 0;
  for_each_avoider(n, [&](std::span<const int>, const WordStats&) { ++count; });
  return count;
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 0 || n > 10) throw std::out_of_range("all_permutations: n must lie in [0, 10]");
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

}  // namespace pavstat
