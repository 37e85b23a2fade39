// Command-line front end for the unavoidable-structure library.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unavoidable/unavoidable.hpp"

namespace {

using namespace unavoidable;

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_negative = 2;  // insufficient / none / invalid

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

BranchingVector parse_branching(const std::string& text) {
  std::vector<std::size_t> ks;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("malformed branching entry '" + item + "'");
    ks.push_back(static_cast<std::size_t>(v));
  }
  return BranchingVector(std::move(ks));
}

std::string join(const std::vector<vertex_t>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + std::to_string(vs[i]);
  return out;
}

void print_extracted(const ExtractedTree& t) {
  std::cout << "# origin: " << join(t.origin) << '\n' << emit_hosted_tree(t.hosted);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extract and certify cliques, bicliques and n-trees in graphs hosting large trees"};
  app.require_subcommand(1);

  std::string input, cert_path, tree_spec, branching = "2,2", noise = "none", prob = "0",
                                             order_spec = "path,biclique,clique", output;
  std::size_t m = 0, k = 0, n = 0;
  std::uint64_t seed = 0;
  std::size_t big_m = 0, big_k = 0;

  auto* deg = app.add_subcommand("degeneracy", "Degeneracy and elimination order");
  deg->add_option("--input", input, "Edge-list or hosted-tree file")->required();

  auto* embed = app.add_subcommand("embed-tree", "Embed a (k1,...,kn)-tree as a subgraph");
  embed->add_option("--input", input, "Edge-list or hosted-tree file")->required();
  embed->add_option("--tree", tree_spec, "Branching vector, e.g. 2,2")->required();

  auto* cdesc = app.add_subcommand("clean-desc", "Extract a descendant-only m-ary tree");
  cdesc->add_option("--input", input, "Hosted-tree file")->required();
  cdesc->add_option("--m", m, "Branching to keep")->required()->check(CLI::PositiveNumber);
  cdesc->add_option("--order", order_spec, "Detector order");

  auto* clink = app.add_subcommand("clean-linked", "Majority-rule linked-generation cleaning");
  clink->add_option("--input", input, "Descendant-only hosted-tree file")->required();
  clink->add_option("--k", k, "Target height and branching")->required();

  auto* find = app.add_subcommand("find-structure", "Find an induced K_n, K_{n,n} or n-tree");
  find->add_option("--input", input, "Hosted-tree file")->required();
  find->add_option("--n", n, "Structure size")->required()->check(CLI::PositiveNumber);
  find->add_option("--order", order_spec, "Detector order, e.g. path,clique,biclique");

  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  verify->add_option("--input", input, "Edge-list or hosted-tree file")->required();
  verify->add_option("--cert", cert_path, "Certificate JSON file")->required();

  auto* gen = app.add_subcommand("generate", "Seeded hosted-tree instance");
  gen->add_option("--branching", branching, "Branching vector, e.g. 4,4");
  gen->add_option("--noise", noise, "none | ancestor_descendant_only | arbitrary");
  gen->add_option("--p", prob, "Edge probability: a/b, decimal or integer");
  gen->add_option("--seed", seed, "64-bit seed");
  gen->add_option("--output", output, "Write to file instead of stdout");

  auto* consts = app.add_subcommand("constants", "Tower constants as key=value lines");
  auto* opt_m = consts->add_option("--M", big_m, "Trace k_1..k_M and N(M)");
  auto* opt_k = consts->add_option("--K", big_k, "Print M(K)");
  opt_m->excludes(opt_k);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*deg) {
      const Graph g = parse_any_graph(read_file(input));
      const auto order = degeneracy(g);
      std::cout << "degeneracy=" << order.degeneracy << "\norder=" << join(order.order) << '\n';
      return exit_ok;
    }
    if (*embed) {
      const Graph g = parse_any_graph(read_file(input));
      const RootedTree t = build_k_tree(parse_branching(tree_spec));
      const auto map = embed_tree_subgraph(g, t);
      if (!map) {
        std::cout << "none\n";
        return exit_negative;
      }
      std::cout << "map=" << join(*map) << '\n';
      return exit_ok;
    }
    if (*cdesc) {
      const HostedTree ht = parse_hosted_tree(read_file(input));
      const CleanOutcome out = clean_descendant_only(ht, m, parse_detector_order(order_spec));
      if (const auto* t = std::get_if<ExtractedTree>(&out)) {
        print_extracted(*t);
        return exit_ok;
      }
      if (const auto* c = std::get_if<CliqueCert>(&out)) {
        std::cout << certificate_to_json(*c).dump(2) << '\n';
        return exit_ok;
      }
      if (const auto* b = std::get_if<BicliqueCert>(&out)) {
        std::cout << certificate_to_json(*b).dump(2) << '\n';
        return exit_ok;
      }
      ordered_json j{{"kind", "insufficient"}, {"reason", std::get<Insufficient>(out).reason}};
      std::cout << j.dump(2) << '\n';
      return exit_negative;
    }
    if (*clink) {
      const HostedTree ht = parse_hosted_tree(read_file(input));
      const auto out = clean_linked_generation(ht, k);
      if (!out) {
        std::cout << "none\n";
        return exit_negative;
      }
      print_extracted(*out);
      return exit_ok;
    }
    if (*find) {
      const HostedTree ht = parse_hosted_tree(read_file(input));
      const auto result = find_unavoidable_structure(ht, n, parse_detector_order(order_spec));
      std::cout << pipeline_to_json(result).dump(2) << '\n';
      return std::holds_alternative<PipelineFound>(result) ? exit_ok : exit_negative;
    }
    if (*verify) {
      const Graph g = parse_any_graph(read_file(input));
      const Certificate cert = certificate_from_json(ordered_json::parse(read_file(cert_path)));
      const Verdict v = verify_certificate(g, cert);
      if (v) {
        std::cout << "valid\n";
        return exit_ok;
      }
      std::cout << "invalid: " << v.reason;
      if (v.pair) std::cout << " (" << v.pair->first << ", " << v.pair->second << ")";
      std::cout << '\n';
      return exit_negative;
    }
    if (*gen) {
      GeneratorConfig cfg{parse_branching(branching), parse_noise_mode(noise), parse_rational(prob), seed};
      const std::string text = "# scheme=" + std::string(generator_scheme) + " seed=" +
                               std::to_string(seed) + "\n" + emit_hosted_tree(generate_hosted_tree(cfg));
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream(output, std::ios::binary) << text;
      }
      return exit_ok;
    }
    if (*consts) {
      if (*opt_k) {
        std::cout << "K=" << big_k << "\nM=" << compute_M_of_K(big_k) << '\n';
        return exit_ok;
      }
      if (!*opt_m) throw std::invalid_argument("constants needs --M or --K");
      const NTrace trace = compute_N_of_M(big_m);
      std::cout << "M=" << trace.m << "\nc_bound=" << trace.c_bound << "\nR_MM=" << trace.r_mm.value
                << "\nR_MM_kind=" << (trace.r_mm.exact() ? "exact" : "upper_bound")
                << "\nR_MM_source=" << trace.r_mm.source << '\n';
      for (std::size_t t = 0; t < trace.ks.size(); ++t) std::cout << 'k' << t + 1 << '=' << trace.ks[t] << '\n';
      std::cout << "N=" << trace.n() << '\n';
      return exit_ok;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}
