#include "ising/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace ising {

Partition Partition::of(int d, std::vector<std::vector<int>> blocks) {
  if (d < 1) throw std::invalid_argument("partition: d must be >= 1");
  std::vector<char> seen(d, 0);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("partition: empty block");
    std::sort(b.begin(), b.end());
    for (int v : b) {
      if (v < 0 || v >= d)
        throw std::invalid_argument("partition: position out of range");
      if (seen[v]) throw std::invalid_argument("partition: repeated position");
      seen[v] = 1;
    }
  }
  for (int v = 0; v < d; ++v)
    if (!seen[v]) throw std::invalid_argument("partition: positions not covered");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  Partition p;
  p.d = d;
  p.blocks = std::move(blocks);
  return p;
}

Partition Partition::single(int d) {
  std::vector<int> all(d);
  for (int i = 0; i < d; ++i) all[i] = i;
  return of(d, {all});
}

Partition Partition::singletons(int d) {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < d; ++i) blocks.push_back({i});
  return of(d, std::move(blocks));
}

std::vector<Partition> Partition::all(int d) {
  std::vector<Partition> out;
  std::vector<int> label(d, 0);
  while (true) {
    int nblocks = 0;
    for (int v : label) nblocks = std::max(nblocks, v + 1);
    std::vector<std::vector<int>> blocks(nblocks);
    for (int i = 0; i < d; ++i) blocks[label[i]].push_back(i);
    out.push_back(of(d, std::move(blocks)));
    // Next restricted growth string.
    int i = d - 1;
    for (; i > 0; --i) {
      int maxprev = 0;
      for (int j = 0; j < i; ++j) maxprev = std::max(maxprev, label[j]);
      if (label[i] <= maxprev) break;
    }
    if (i == 0) break;
    ++label[i];
    for (int j = i + 1; j < d; ++j) label[j] = 0;
  }
  return out;
}

Partition Partition::parse(const std::string& s, int d) {
  std::vector<std::vector<int>> blocks;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < s.size()) {
    if (s[i] != '{')
      throw std::invalid_argument("partition: expected '{' in \"" + s + "\"");
    ++i;
    std::vector<int> block;
    while (true) {
      skip_ws();
      if (i >= s.size())
        throw std::invalid_argument("partition: unterminated block");
      if (s[i] == '}') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
      if (j == i)
        throw std::invalid_argument("partition: expected index in \"" + s + "\"");
      block.push_back(std::stoi(s.substr(i, j - i)) - 1);  // 1-based input
      i = j;
      skip_ws();
      if (i < s.size() && s[i] == ',') ++i;
    }
    blocks.push_back(std::move(block));
    skip_ws();
  }
  return of(d, std::move(blocks));
}

std::string Partition::str() const {
  std::string s;
  for (const auto& b : blocks) {
    s += '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(b[i] + 1);
    }
    s += '}';
  }
  return s;
}

bool Partition::refines(const Partition& coarser) const {
  if (d != coarser.d) return false;
  std::vector<int> owner(d, -1);
  for (std::size_t k = 0; k < coarser.blocks.size(); ++k)
    for (int v : coarser.blocks[k]) owner[v] = static_cast<int>(k);
  for (const auto& b : blocks) {
    for (std::size_t i = 1; i < b.size(); ++i)
      if (owner[b[i]] != owner[b[0]]) return false;
  }
  return true;
}

}  // namespace ising
