#include "l2net/pendant_form.hpp"

#include <algorithm>
#include <tuple>

namespace l2net {

PendantForm PendantForm::level1(Chain a) {
  PendantForm f;
  f.kind = Kind::Level1;
  f.a = std::move(a);
  return f;
}

PendantForm PendantForm::level2(Chain a, Chain b, Chain c, Chain d) {
  PendantForm f;
  f.kind = Kind::Level2;
  f.a = std::move(a);
  f.b = std::move(b);
  f.c = std::move(c);
  f.d = std::move(d);
  return f;
}

namespace {
Chain reversed(Chain c) {
  std::reverse(c.begin(), c.end());
  return c;
}
}  // namespace

PendantForm PendantForm::canonical() const {
  if (kind == Kind::Level1) {
    if (!a.empty() && a.back() < a.front()) return level1(reversed(a));
    return *this;
  }
  // Swapping the two free main paths and exchanging the poles give the four
  // layouts of one blob. Prefer a non-empty `a` and `c`, then lexicographic.
  std::vector<PendantForm> variants;
  PendantForm flip = level2(reversed(a), reversed(b), reversed(d), reversed(c));
  for (const PendantForm& f : {*this, flip}) {
    variants.push_back(f);
    variants.push_back(level2(f.b, f.a, f.c, f.d));
  }
  auto key = [](const PendantForm& f) {
    return std::make_tuple(f.a.empty(), f.c.empty(), f.a, f.b, f.c, f.d);
  };
  return *std::min_element(variants.begin(), variants.end(),
                           [&](const PendantForm& x, const PendantForm& y) { return key(x) < key(y); });
}

std::string PendantForm::shape() const {
  if (kind == Kind::Level1) return "L1";
  PendantForm f = canonical();
  std::string s = "(a,";
  s += f.b.empty() ? "0," : "b,";
  s += f.c.empty() ? "0," : "c,";
  s += f.d.empty() ? "0)" : "d)";
  return s;
}

std::string chain_to_string(const Chain& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i];
  return s + ")";
}

std::string PendantForm::to_string() const {
  if (kind == Kind::Level1) return "Level1" + chain_to_string(a);
  return "Level2(" + chain_to_string(a) + "," + chain_to_string(b) + "," + chain_to_string(c) + "," +
         chain_to_string(d) + ")";
}

std::vector<std::string> PendantForm::leaves() const {
  std::vector<std::string> out;
  for (const Chain* ch : {&a, &b, &c, &d}) out.insert(out.end(), ch->begin(), ch->end());
  return out;
}

std::size_t PendantForm::leaf_count() const { return a.size() + b.size() + c.size() + d.size(); }

bool PendantForm::well_formed() const {
  if (kind == Kind::Level1) return a.size() >= 2 && b.empty() && c.empty() && d.empty();
  if (a.empty() && b.empty()) return false;
  // A blob whose only leaf-side is one chain of length one would have two
  // cut-edges inducing the same split.
  return leaf_count() >= 2;
}

}  // namespace l2net
