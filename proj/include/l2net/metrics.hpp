#pragma once

#include <string>
#include <vector>

#include "l2net/network.hpp"

namespace l2net {

// Square distance table over named taxa. Every matrix carries shortest
// distances; sl matrices also carry longest distances. Taxa keep the order
// they were given in, so files round-trip unchanged.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::vector<std::string> taxa, bool with_longest);

  std::size_t size() const { return taxa_.size(); }
  const std::vector<std::string>& taxa() const { return taxa_; }
  std::vector<std::string> sorted_taxa() const;
  bool has_longest() const { return with_longest_; }

  bool contains(const std::string& taxon) const;
  int index(const std::string& taxon) const;  // throws UnknownLeaf

  int shortest(int i, int j) const { return dm_[i * size() + j]; }
  int longest(int i, int j) const { return dl_[i * size() + j]; }
  int shortest(const std::string& x, const std::string& y) const;
  int longest(const std::string& x, const std::string& y) const;
  void set(int i, int j, int dm, int dl);
  void set_shortest(int i, int j, int dm);

  DistanceMatrix shortest_only() const;
  // Copy without the given taxa.
  DistanceMatrix without(const std::vector<std::string>& drop) const;
  // Copy with an extra taxon appended; its distances start at zero.
  DistanceMatrix with_taxon(const std::string& taxon) const;

  // Symmetric, zero diagonal, positive off the diagonal, shortest <= longest.
  // Throws InvalidMatrix.
  void check() const;

  // Equality ignores taxon order.
  bool operator==(const DistanceMatrix& o) const;

 private:
  std::vector<std::string> taxa_;
  std::vector<std::pair<std::string, int>> lookup_;  // sorted by name
  bool with_longest_ = false;
  std::vector<int> dm_, dl_;
};

// Plain table of one distance kind, taxa sorted.
struct LengthTable {
  std::vector<std::string> taxa;
  std::vector<int> cells;
  int at(std::size_t i, std::size_t j) const { return cells[i * taxa.size() + j]; }
  bool operator==(const LengthTable&) const = default;
};

DistanceMatrix shortest_matrix(const Network& net);
// Longest simple paths composed block by block: bridges add one, and inside a
// blob the entry and exit vertices are joined by the longest of the few simple
// routes. Throws LevelTooHigh above level 2.
LengthTable longest_matrix(const Network& net);
DistanceMatrix sl_matrix(const Network& net);
// Exhaustive simple-path search; throws TooLarge beyond `max_vertices`.
LengthTable brute_force_longest(const Network& net, std::size_t max_vertices = 60);

// `n`, the taxa, then n rows; cells are `dm:dl` or bare `dm`. Tab separated.
DistanceMatrix parse_matrix(const std::string& text);
std::string format_matrix(const DistanceMatrix& m);

}  // namespace l2net
