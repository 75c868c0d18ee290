#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "l2net/metrics.hpp"

namespace l2net {

// Maximal run of leaves whose attachment vertices form a path (or, for a
// network that is one cycle, a cycle). Consecutive leaves are at shortest
// distance 3.
struct LeafChain {
  std::vector<std::string> leaves;
  bool cyclic = false;

  const std::string& front() const { return leaves.front(); }
  const std::string& back() const { return leaves.back(); }
  std::size_t size() const { return leaves.size(); }
  bool operator==(const LeafChain&) const = default;
};

std::vector<std::pair<std::string, std::string>> find_cherries(const DistanceMatrix& m);
// Replace cherry {x,y} by leaf z one step closer to everything.
DistanceMatrix reduce_cherry(const DistanceMatrix& m, const std::string& x, const std::string& y,
                             const std::string& z);
DistanceMatrix expand_cherry(const DistanceMatrix& m, const std::string& z, const std::string& x,
                             const std::string& y);

// Chains sorted by first leaf; each path chain starts at its smaller end.
// Throws CherriesPresent, InvalidMatrix when the distance-3 graph branches.
std::vector<LeafChain> chains_from_matrix(const DistanceMatrix& m);

enum class Adjacency { None, Once, Twice };

// Two chains are adjacent when some end-leaves of them are at shortest
// distance 4. Two single-leaf chains are never reported as Twice.
struct ChainAdjacency {
  std::size_t count = 0;
  std::vector<Adjacency> kind;
  std::vector<std::vector<std::pair<std::string, std::string>>> witnesses;

  Adjacency at(std::size_t i, std::size_t j) const { return kind[i * count + j]; }
  const std::vector<std::pair<std::string, std::string>>& witness(std::size_t i, std::size_t j) const {
    return witnesses[i * count + j];
  }
};
ChainAdjacency chain_adjacency(const DistanceMatrix& m, const std::vector<LeafChain>& chains);

// Distance between a taxon and a chain read as a set: smallest shortest
// distance, largest longest distance.
int chain_shortest(const DistanceMatrix& m, const std::vector<std::string>& chain, const std::string& x);
int chain_longest(const DistanceMatrix& m, const std::vector<std::string>& chain, const std::string& x);

// Source of `_z<counter>` names that avoid every taxon seen so far.
class FreshNames {
 public:
  explicit FreshNames(const std::vector<std::string>& taken = {});
  void reserve(const std::vector<std::string>& taken);
  std::string next();

 private:
  std::set<std::string> taken_;
  int counter_ = 0;
};

}  // namespace l2net
