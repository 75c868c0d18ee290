// Command-line front end. Exit codes: 0 ok / Unique, 1 no alt-path or not
// isomorphic, 10 Ambiguous, 20 Unrealizable or failed verification, 64 usage,
// 65 bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "l2net/altpath.hpp"
#include "l2net/blobs.hpp"
#include "l2net/errors.hpp"
#include "l2net/metrics.hpp"
#include "l2net/pendant.hpp"
#include "l2net/reconstruct.hpp"
#include "l2net/splits.hpp"
#include "l2net/testkit.hpp"

using namespace l2net;

namespace {

constexpr int kOk = 0;
constexpr int kNone = 1;
constexpr int kAmbiguous = 10;
constexpr int kUnrealizable = 20;
constexpr int kUsage = 64;
constexpr int kBadInput = 65;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadInput("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Network load_network(const std::string& path) {
  try {
    return parse_network(read_file(path));
  } catch (const Error& e) {
    throw BadInput(path + ": " + e.what());
  }
}

DistanceMatrix load_matrix(const std::string& path) {
  try {
    return parse_matrix(read_file(path));
  } catch (const Error& e) {
    throw BadInput(path + ": " + e.what());
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconstruct level-2 phylogenetic networks from distance matrices"};
  app.require_subcommand(1);
  int code = kOk;

  // distances
  std::string in, out, out2, mode = "sl", method = "auto", part, tree_path, other;
  bool shortest_only = false, all = false, show_trace = false;
  auto* distances = app.add_subcommand("distances", "Distance matrix of a network");
  distances->add_option("--in", in, "network file")->required();
  distances->add_option("--out", out, "matrix file (stdout when omitted)");
  distances->add_flag("--shortest", shortest_only, "shortest distances only");
  distances->callback([&] {
    Network net = load_network(in);
    emit(out, format_matrix(shortest_only ? shortest_matrix(net) : sl_matrix(net)));
  });

  auto* reconstruct = app.add_subcommand("reconstruct", "Network(s) realising a matrix");
  reconstruct->add_option("--mode", mode, "sl, shortest or genside")
      ->check(CLI::IsMember({"sl", "shortest", "genside"}));
  reconstruct->add_option("--in", in, "matrix file")->required();
  reconstruct->add_option("--out", out, "network file (stdout when omitted)");
  reconstruct->add_flag("--all", all, "print every network of an ambiguous result");
  reconstruct->add_flag("--trace", show_trace, "print the reduction steps to stderr");
  reconstruct->callback([&] {
    DistanceMatrix m = load_matrix(in);
    if (mode == "sl" && !m.has_longest()) throw BadInput(in + ": sl mode needs longest distances");
    ReconstructionResult r = mode == "sl"         ? reconstruct_sl(m)
                             : mode == "shortest" ? reconstruct_shortest(m)
                                                  : reconstruct_genside(m);
    std::cerr << outcome_name(r.outcome);
    if (!r.networks.empty()) std::cerr << " (" << r.networks.size() << " network(s))";
    if (!r.reason.empty()) std::cerr << ": " << r.reason;
    std::cerr << "\n";
    if (show_trace)
      for (const auto& s : r.trace) std::cerr << "  " << s.to_string() << "\n";
    std::string text;
    std::size_t shown = all ? r.networks.size() : std::min<std::size_t>(1, r.networks.size());
    for (std::size_t i = 0; i < shown; ++i) {
      if (r.networks.size() > 1) text += (i ? "\n" : "") + std::string("# network ") + std::to_string(i + 1) + "\n";
      text += format_network(r.networks[i]);
    }
    emit(out, text);
    code = r.outcome == ReconstructionResult::Outcome::Unique      ? kOk
           : r.outcome == ReconstructionResult::Outcome::Ambiguous ? kAmbiguous
                                                                   : kUnrealizable;
  });

  auto* check_splits = app.add_subcommand("check-splits", "Cut-edge splits read from a matrix");
  check_splits->add_option("--in", in, "matrix file")->required();
  check_splits->add_option("--method", method, "auto, structured or exhaustive")
      ->check(CLI::IsMember({"auto", "structured", "exhaustive"}));
  check_splits->callback([&] {
    DistanceMatrix m = load_matrix(in);
    SplitSearch s = method == "exhaustive"   ? SplitSearch::Exhaustive
                    : method == "structured" ? SplitSearch::Structured
                                             : SplitSearch::Auto;
    for (const Split& sp : all_splits(m, s)) std::cout << sp.to_string() << "\n";
  });

  auto* classify = app.add_subcommand("classify-pendant", "Shape of the pendant blob holding a minimal part");
  classify->add_option("--in", in, "matrix file")->required();
  classify->add_option("--part", part, "comma-separated taxa of the part")->required();
  classify->callback([&] {
    DistanceMatrix m = load_matrix(in);
    auto taxa = split_list(part);
    if (m.has_longest()) {
      std::cout << identify_pendant(m, taxa).to_string() << "\n";
    } else {
      auto forms = pendant_candidates(m, taxa, false);
      for (const auto& f : forms) std::cout << f.to_string() << "\n";
      if (forms.empty()) code = kUnrealizable;
    }
  });

  auto* altpath = app.add_subcommand("altpath", "Alt-path structures");
  altpath->require_subcommand(1);
  auto* detect = altpath->add_subcommand("detect", "Find an alt-path structure in a network");
  detect->add_option("--in", in, "network file")->required();
  detect->callback([&] {
    auto emb = detect_altpath(load_network(in));
    if (!emb) {
      std::cout << "none\n";
      code = kNone;
      return;
    }
    std::cout << format_colored_tree(emb->tree);
  });
  auto* make_pair = altpath->add_subcommand("make-pair", "Build the two similar alt-path structures of a tree");
  make_pair->add_option("--tree", tree_path, "coloured tree file")->required();
  make_pair->add_option("--out1", out, "first network")->required();
  make_pair->add_option("--out2", out2, "similar network")->required();
  make_pair->callback([&] {
    ColoredTree t;
    try {
      t = parse_colored_tree(read_file(tree_path));
    } catch (const Error& e) {
      throw BadInput(tree_path + ": " + e.what());
    }
    emit(out, format_network(build_altpath(t)));
    emit(out2, format_network(build_altpath(similar(t))));
  });

  GenParams gp;
  int leaves = 0;
  bool no_bad = false, genside = false;
  auto* random = app.add_subcommand("random", "Random network");
  random->add_option("--seed", gp.seed, "random seed")->required();
  random->add_option("--leaves", leaves, "exact leaf count");
  random->add_option("--min-leaves", gp.min_leaves);
  random->add_option("--max-leaves", gp.max_leaves);
  random->add_option("--min-blobs", gp.min_blobs);
  random->add_option("--max-blobs", gp.max_blobs);
  random->add_option("--max-chain", gp.max_chain);
  random->add_option("--bad-blob-rate", gp.bad_blob_rate);
  random->add_flag("--no-bad-blobs", no_bad, "avoid blob shapes that can become bad pendant blobs");
  random->add_flag("--genside", genside, "leaf on every generator side");
  random->add_option("--max-level", gp.max_level, "highest level in --genside mode");
  random->add_option("--out", out, "network file (stdout when omitted)");
  random->callback([&] {
    if (leaves > 0) gp.min_leaves = gp.max_leaves = leaves;
    gp.allow_bad_blobs = !no_bad;
    gp.require_leaf_every_side = genside;
    emit(out, format_network(random_network(gp)));
  });

  auto* verify = app.add_subcommand("verify", "Round trip: distances, reconstruction, isomorphism");
  verify->add_option("--in", in, "network file")->required();
  verify->add_option("--mode", mode, "sl, shortest or genside")
      ->check(CLI::IsMember({"sl", "shortest", "genside"}));
  verify->callback([&] {
    RoundTripReport rep = verify_roundtrip(load_network(in), parse_mode(mode));
    std::cout << (rep.pass ? "pass" : "FAIL") << " " << outcome_name(rep.outcome) << " (" << rep.survivors
              << " network(s))\n";
    if (!rep.pass) {
      std::cout << rep.message << "\n";
      for (const auto& s : rep.trace) std::cout << "  " << s << "\n";
      code = kUnrealizable;
    }
  });

  auto* iso = app.add_subcommand("iso", "Leaf-labelled isomorphism test");
  iso->add_option("first", in, "network file")->required();
  iso->add_option("second", other, "network file")->required();
  iso->callback([&] {
    bool same = is_isomorphic(load_network(in), load_network(other));
    std::cout << (same ? "isomorphic" : "not isomorphic") << "\n";
    code = same ? kOk : kNone;
  });

  auto* dot = app.add_subcommand("dot", "Graphviz rendering of a network");
  dot->add_option("--in", in, "network file")->required();
  dot->add_option("--out", out, "dot file (stdout when omitted)");
  dot->callback([&] { emit(out, to_dot(load_network(in))); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    bool bad_input = e.kind() == "ParseError" || e.kind() == "InvalidNetwork" || e.kind() == "InvalidMatrix" ||
                     e.kind() == "TaxonCollision" || e.kind() == "TaxaMismatch";
    return bad_input ? kBadInput : kUnrealizable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnrealizable;
  }
  return code;
}
