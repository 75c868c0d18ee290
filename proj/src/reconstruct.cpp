#include "l2net/reconstruct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "l2net/blobs.hpp"
#include "l2net/errors.hpp"
#include "l2net/pendant.hpp"
#include "l2net/splits.hpp"

namespace l2net {

std::string TraceStep::to_string() const {
  switch (kind) {
    case Kind::Cherry:
      return "cherry " + x + "," + y + " -> " + z;
    case Kind::Blob:
      return "blob " + form.to_string() + " -> " + z;
    case Kind::DropMiddle:
      return "drop " + a2 + " between " + a1 + "," + a3;
  }
  return {};
}

std::string outcome_name(ReconstructionResult::Outcome o) {
  switch (o) {
    case ReconstructionResult::Outcome::Unique:
      return "Unique";
    case ReconstructionResult::Outcome::Ambiguous:
      return "Ambiguous";
    case ReconstructionResult::Outcome::Unrealizable:
      return "Unrealizable";
  }
  return {};
}

namespace {

VertexId only_neighbor(const Network& net, VertexId leaf) { return net.neighbors(leaf).at(0); }

}  // namespace

Network replay(const Network& base, const ReductionTrace& trace) {
  Network net = base;
  for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
    const TraceStep& s = *it;
    if (s.kind == TraceStep::Kind::Cherry) {
      VertexId v = net.leaf(s.z);
      net.clear_label(v);
      for (const auto& t : {s.x, s.y}) {
        VertexId leaf = net.add_vertex();
        net.add_edge(v, leaf);
        net.set_label(leaf, t);
      }
    } else if (s.kind == TraceStep::Kind::Blob) {
      net = expand_pendant(net, s.z, s.form);
    } else {
      VertexId s1 = only_neighbor(net, net.leaf(s.a1));
      VertexId s3 = only_neighbor(net, net.leaf(s.a3));
      net.remove_edge(s1, s3);
      VertexId s2 = net.add_vertex();
      VertexId leaf = net.add_vertex();
      net.add_edge(s1, s2);
      net.add_edge(s2, s3);
      net.add_edge(s2, leaf);
      net.set_label(leaf, s.a2);
    }
  }
  return net;
}

namespace {

bool realizes(const Network& net, const DistanceMatrix& m) {
  if (!is_valid(net) || net.taxa() != m.sorted_taxa()) return false;
  if (m.has_longest()) {
    if (level(net) > 2) return false;
    return sl_matrix(net) == m;
  }
  return shortest_matrix(net) == m;
}

// Cherries go first, always the lexicographically smallest pair.
void strip_cherries(DistanceMatrix& m, ReductionTrace& trace, FreshNames& names) {
  while (true) {
    auto cherries = find_cherries(m);
    if (cherries.empty()) return;
    TraceStep step;
    step.kind = TraceStep::Kind::Cherry;
    step.x = cherries.front().first;
    step.y = cherries.front().second;
    step.z = names.next();
    m = reduce_cherry(m, step.x, step.y, step.z);
    trace.push_back(step);
  }
}

Network theta_network(const std::vector<Chain>& paths) {
  Network net;
  VertexId p = net.add_vertex(), q = net.add_vertex();
  for (const Chain& c : paths) {
    VertexId prev = p;
    for (const auto& t : c) {
      VertexId s = net.add_vertex(), leaf = net.add_vertex();
      net.add_edge(prev, s);
      net.add_edge(s, leaf);
      net.set_label(leaf, t);
      prev = s;
    }
    net.add_edge(prev, q);
  }
  return net;
}

ReconstructionResult unrealizable(const std::string& why) {
  ReconstructionResult r;
  r.outcome = ReconstructionResult::Outcome::Unrealizable;
  r.reason = why;
  return r;
}

void finish(ReconstructionResult& r, std::map<std::string, std::pair<Network, ReductionTrace>>& found) {
  r.networks.clear();
  for (auto& [key, value] : found) r.networks.push_back(value.first);
  if (!found.empty()) r.trace = found.begin()->second.second;
  r.outcome = found.empty()       ? ReconstructionResult::Outcome::Unrealizable
              : found.size() == 1 ? ReconstructionResult::Outcome::Unique
                                  : ReconstructionResult::Outcome::Ambiguous;
}

}  // namespace

ReconstructionResult reconstruct_single_blob(const DistanceMatrix& m) {
  if (!find_cherries(m).empty()) throw CherriesPresent("single-blob reconstruction needs a cherry-free matrix");
  std::vector<Network> layouts;
  const std::size_t n = m.size();
  auto taxa = m.sorted_taxa();
  if (n == 2) {
    Network net;
    VertexId a = net.add_vertex(), b = net.add_vertex();
    net.add_edge(a, b);
    net.set_label(a, taxa[0]);
    net.set_label(b, taxa[1]);
    layouts.push_back(net);
  }
  std::vector<LeafChain> chains;
  try {
    chains = chains_from_matrix(m);
  } catch (const Error& e) {
    if (layouts.empty()) return unrealizable(e.what());
  }
  if (chains.size() == 1 && chains[0].cyclic) {
    Network net;
    VertexId first = -1, prev = -1;
    for (const auto& t : chains[0].leaves) {
      VertexId s = net.add_vertex(), leaf = net.add_vertex();
      net.add_edge(s, leaf);
      net.set_label(leaf, t);
      if (prev >= 0) net.add_edge(prev, s);
      else first = s;
      prev = s;
    }
    net.add_edge(prev, first);
    layouts.push_back(net);
  }
  if ((chains.size() == 2 || chains.size() == 3) &&
      std::none_of(chains.begin(), chains.end(), [](const LeafChain& c) { return c.cyclic; })) {
    // The first chain fixes the pole order; the others take either direction.
    std::vector<Chain> c;
    for (const auto& ch : chains) c.push_back(ch.leaves);
    while (c.size() < 3) c.push_back({});
    for (int mask = 0; mask < 4; ++mask) {
      std::vector<Chain> paths = c;
      for (int k = 1; k < 3; ++k)
        if (mask >> (k - 1) & 1) std::reverse(paths[k].begin(), paths[k].end());
      layouts.push_back(theta_network(paths));
    }
  }
  std::map<std::string, std::pair<Network, ReductionTrace>> found;
  for (const Network& net : layouts)
    if (realizes(net, m)) found.emplace(canonical_form(net), std::make_pair(net, ReductionTrace{}));
  ReconstructionResult r;
  finish(r, found);
  if (found.empty()) r.reason = "no single blob fits the matrix";
  return r;
}

ReconstructionResult reconstruct_sl(const DistanceMatrix& m) {
  if (!m.has_longest()) throw InvalidMatrix("sl reconstruction needs longest distances");
  try {
    m.check();
    FreshNames names(m.taxa());
    DistanceMatrix cur = m;
    ReductionTrace trace;
    while (true) {
      strip_cherries(cur, trace, names);
      if (cur.size() < 4) break;
      std::vector<std::vector<std::string>> parts;
      try {
        parts = minimal_parts(cur);
      } catch (const NoNontrivialSplit&) {
        break;
      }
      TraceStep step;
      step.kind = TraceStep::Kind::Blob;
      step.form = identify_pendant(cur, parts.front());
      step.z = names.next();
      cur = reduce_pendant(cur, step.form, step.z).matrix;
      trace.push_back(step);
    }
    ReconstructionResult base = reconstruct_single_blob(cur);
    if (base.outcome != ReconstructionResult::Outcome::Unique)
      return unrealizable("base case: " + outcome_name(base.outcome));
    Network net = replay(base.networks[0], trace);
    if (!realizes(net, m)) return unrealizable("replayed network does not realise the matrix");
    ReconstructionResult r;
    r.outcome = ReconstructionResult::Outcome::Unique;
    r.networks = {net};
    r.trace = trace;
    return r;
  } catch (const BranchBudgetExceeded&) {
    throw;
  } catch (const Error& e) {
    return unrealizable(e.kind() + ": " + e.what());
  }
}

ReconstructionResult reconstruct_shortest(const DistanceMatrix& input, std::size_t branch_cap) {
  const DistanceMatrix m = input.shortest_only();
  try {
    m.check();
  } catch (const Error& e) {
    return unrealizable(e.what());
  }
  FreshNames names(m.taxa());
  std::map<std::string, std::pair<Network, ReductionTrace>> found;
  std::size_t explored = 0;
  std::string last_failure;

  std::function<void(DistanceMatrix, ReductionTrace)> run;
  // A wrong guess usually surfaces as an inconsistent matrix further down;
  // that only ends the branch that made it.
  auto run_branch = [&](DistanceMatrix cur, ReductionTrace trace) {
    try {
      run(std::move(cur), std::move(trace));
    } catch (const BranchBudgetExceeded&) {
      throw;
    } catch (const Error& e) {
      last_failure = e.kind() + ": " + e.what();
    }
  };
  run = [&](DistanceMatrix cur, ReductionTrace trace) {
    if (++explored > branch_cap)
      throw BranchBudgetExceeded("more than " + std::to_string(branch_cap) + " branches");
    while (true) {
      strip_cherries(cur, trace, names);
      if (cur.size() < 4) break;
      std::vector<std::vector<std::string>> parts;
      try {
        parts = minimal_parts(cur);
      } catch (const NoNontrivialSplit&) {
        break;
      }
      // A part with a single consistent layout is forced; branch only when
      // every part is ambiguous.
      std::vector<std::vector<PendantForm>> options;
      int forced = -1;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        options.push_back(pendant_candidates(cur, parts[i], false));
        if (options.back().empty()) {
          last_failure = "no layout fits part " + chain_to_string(parts[i]);
          return;
        }
        if (options.back().size() == 1) {
          forced = static_cast<int>(i);
          break;
        }
      }
      auto reduce_with = [&](DistanceMatrix& mat, ReductionTrace& tr, const PendantForm& form) {
        TraceStep step;
        step.kind = TraceStep::Kind::Blob;
        step.form = form;
        step.z = names.next();
        mat = reduce_pendant(mat, form, step.z).matrix;
        tr.push_back(step);
      };
      if (forced >= 0) {
        reduce_with(cur, trace, options[forced][0]);
        continue;
      }
      const auto& forms = options[0];
      bool all_bad = std::all_of(forms.begin(), forms.end(), [](const PendantForm& f) { return is_bad_form(f); });
      if (all_bad && parts[0].size() == 3 && forms[0].a.size() == 3) {
        // Both readings of a bad chain of three agree once the middle leaf
        // is gone; it is put back on the spine at replay.
        const Chain& a = forms[0].a;
        TraceStep step;
        step.kind = TraceStep::Kind::DropMiddle;
        step.a1 = a[0];
        step.a2 = a[1];
        step.a3 = a[2];
        cur = drop_middle_of_bad_triple(cur, a[0], a[1], a[2]);
        trace.push_back(step);
        continue;
      }
      for (const PendantForm& f : forms) {
        DistanceMatrix next = cur;
        ReductionTrace tr = trace;
        try {
          reduce_with(next, tr, f);
        } catch (const Error& e) {
          last_failure = e.kind() + ": " + e.what();
          continue;
        }
        run_branch(next, tr);
      }
      return;
    }
    ReconstructionResult base = reconstruct_single_blob(cur);
    if (base.networks.empty()) last_failure = base.reason;
    for (const Network& b : base.networks) {
      Network net = replay(b, trace);
      if (realizes(net, m)) found.emplace(canonical_form(net), std::make_pair(net, trace));
      else last_failure = "replayed network does not realise the matrix";
    }
  };

  ReconstructionResult r;
  run_branch(m, {});
  finish(r, found);
  if (found.empty()) r.reason = last_failure;
  return r;
}

}  // namespace l2net
