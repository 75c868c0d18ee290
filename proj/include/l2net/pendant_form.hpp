#pragma once

#include <string>
#include <vector>

namespace l2net {

using Chain = std::vector<std::string>;

// Shape of a pendant blob in terms of its chains.
//
// Level1: `a` runs around the cycle from one neighbour of the attachment
// vertex to the other.
// Level2: `a` and `b` run from pole p to pole q along the two main paths that
// avoid the attachment vertex u; `c` runs from p to u and `d` from u to q on
// the third main path.
struct PendantForm {
  enum class Kind { Level1, Level2 };

  Kind kind = Kind::Level1;
  Chain a, b, c, d;

  static PendantForm level1(Chain a);
  static PendantForm level2(Chain a, Chain b, Chain c, Chain d);

  // Representative among the layouts that describe the same blob.
  PendantForm canonical() const;
  // "L1" or a pattern such as "(a,0,c,0)".
  std::string shape() const;
  std::string to_string() const;
  std::vector<std::string> leaves() const;
  std::size_t leaf_count() const;
  bool well_formed() const;

  bool operator==(const PendantForm& o) const = default;
};

std::string chain_to_string(const Chain& c);

}  // namespace l2net
