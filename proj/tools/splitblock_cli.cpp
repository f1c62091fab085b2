// splitblock: command-line front end for the block calculus library.
//
// Exit codes: 0 success, 1 invalid input, 2 verification failure.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "splitblock/splitblock.hpp"

namespace sb = splitblock;

namespace {

constexpr int kInvalidInput = 1;
constexpr int kVerificationFailure = 2;

void emit(const sb::json& j) { std::cout << j.dump(2) << '\n'; }

void require_positive(int n, const char* flag) {
  if (n < 1) throw sb::domain_error(std::string(flag) + " must be positive, got " + std::to_string(n));
}

int run_dis(int n, std::optional<int> k, bool pretty) {
  require_positive(n, "-n");
  if (k) require_positive(*k, "-k");
  const auto p = k ? sb::enumerate_dis_k(n, *k) : sb::enumerate_dis(n);
  if (pretty) {
    for (const auto& g : p.elements()) std::cout << sb::to_label(g) << '\n';
    for (auto [hi, lo] : p.covers()) std::cout << sb::to_label(p[lo]) << " < " << sb::to_label(p[hi]) << '\n';
    return 0;
  }
  auto j = sb::to_json(p);
  j["n"] = n;
  if (k) j["k"] = *k;
  emit(j);
  return 0;
}

int run_sblock(int n, bool labels, bool pretty) {
  require_positive(n, "-n");
  const auto p = sb::build_sblock_poset(n);
  if (pretty) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::cout << sb::to_label(p.elements()[i]);
      if (labels) {
        const auto& l = p.label(i);
        std::cout << "  " << sb::amphora_name(n, l.amphora) << (l.ng1 ? " NG-1" : "") << (l.ng2 ? " NG-2" : "")
                  << (l.in_tc ? " TC" : "");
      }
      std::cout << '\n';
    }
    return 0;
  }
  emit(sb::to_json(p, labels));
  return 0;
}

int run_classify(const std::string& pi_text, const std::string& block_text, bool pretty) {
  if (pi_text.empty() == block_text.empty()) throw sb::domain_error("classify needs exactly one of --pi or --block");
  sb::json j;
  sb::Classification c;
  if (!pi_text.empty()) {
    const auto pi = sb::parse_partition(pi_text);
    if (pi.empty()) throw sb::domain_error("--pi must be nonempty");
    const auto reading = sb::sequence_to_block(pi);
    j["pi"] = sb::to_json(pi);
    j["alpha"] = reading.alpha.vector();
    j["beta"] = reading.beta.vector();
    j["mark"] = reading.mark;
    j["n1"] = reading.alpha.sum();
    j["n2"] = reading.beta.sum();
    j["len_alpha"] = reading.alpha.length();
    j["len_beta"] = reading.beta.length();
    j["graphic"] = reading.is_block();
    j["violation"] = reading.violation ? sb::json(std::string(sb::clause_name(*reading.violation))) : sb::json();
    if (reading.is_block()) c = sb::classify(reading.block());
  } else {
    const auto b = sb::parse_block(block_text);
    j["block"] = sb::to_json(b);
    j["n1"] = b.n1();
    j["n2"] = b.n2();
    j["len_alpha"] = b.alpha().length();
    j["len_beta"] = b.beta().length();
    c = sb::classify(b);
    j["sequence"] = sb::to_label(sb::block_to_sequence(b));
  }
  const auto flags = sb::to_json(c);
  for (const auto& [key, value] : flags.items()) j[key] = value;
  if (pretty) {
    for (auto& [key, value] : j.items()) std::cout << key << ": " << value.dump() << '\n';
    return 0;
  }
  emit(j);
  return 0;
}

int run_meetjoin(int n, const std::string& t1, const std::string& t2) {
  require_positive(n, "-n");
  const auto p = sb::build_sblock_poset(n);
  const auto b1 = sb::parse_block(t1);
  const auto b2 = sb::parse_block(t2);
  for (const auto* b : {&b1, &b2})
    if (!b->is_sblock() || b->n1() != n)
      throw sb::domain_error(sb::to_label(*b) + " is not an S-block over n = " + std::to_string(n));
  const auto m = sb::lattice_meet(p, b1, b2);
  const auto jn = sb::lattice_join(p, b1, b2);
  emit({{"n", n},
        {"b1", sb::to_json(b1)},
        {"b2", sb::to_json(b2)},
        {"meet", sb::to_json(m)},
        {"join", sb::to_json(jn)},
        {"case", sb::to_json(sb::table_case(p, b1, b2), n)}});
  return 0;
}

int run_amphoras(int n, bool pretty) {
  require_positive(n, "-n");
  const auto p = sb::build_sblock_poset(n);
  auto j = sb::amphoras_json(p);
  if (pretty) {
    for (const auto& node : j["nodes"])
      std::cout << node["name"].get<std::string>() << "  size " << node["size"] << "  bottom "
                << node["bottom"].get<std::string>() << '\n';
    for (const auto& e : j["covers"])
      std::cout << e["lower"].get<std::string>() << " < " << e["upper"].get<std::string>() << '\n';
    return 0;
  }
  emit(j);
  return 0;
}

int run_ng3(int n, int k) {
  require_positive(n, "-n");
  require_positive(k, "-k");
  emit(sb::to_json(sb::build_ng3_poset(n, k)));
  return 0;
}

int run_hasse(const std::string& target, int n, std::optional<int> k, const std::string& out) {
  require_positive(n, "-n");
  std::string dot;
  if (target == "dis") {
    if (k) dot = sb::dis_dot(sb::enumerate_dis_k(n, *k), "Dis_" + std::to_string(*k) + "(" + std::to_string(n) + ")");
    else dot = sb::dis_dot(sb::enumerate_dis(n), "Dis(" + std::to_string(n) + ")");
  } else if (target == "sblock") {
    dot = sb::sblock_dot(sb::build_sblock_poset(n));
  } else {
    if (!k) throw sb::domain_error("--target ng3 needs -k");
    require_positive(*k, "-k");
    dot = sb::ng3_dot(sb::build_ng3_poset(n, *k));
  }
  if (out.empty() || out == "-") {
    std::cout << dot;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw sb::domain_error("cannot write " + out);
  f << dot;
  return 0;
}

int run_verify(int max_n, int graphs_max_v, int max_sum, unsigned threads) {
  require_positive(max_n, "--max-n");
  if (graphs_max_v < 0 || graphs_max_v > 8) throw sb::domain_error("--graphs-max-v must be in 0..8");
  if (max_sum < 0) max_sum = 2 * max_n;
  std::map<std::string, sb::SuiteResult> merged;
  std::vector<std::string> order;
  auto add = [&](const sb::SuiteResult& r) {
    if (!merged.count(r.name)) {
      order.push_back(r.name);
      merged[r.name] = sb::SuiteResult{r.name};
    }
    sb::merge_into(merged[r.name], r);
  };
  std::map<int, sb::SBlockPoset> posets;
  auto poset_of = [&](int n) -> const sb::SBlockPoset& {
    auto it = posets.find(n);
    if (it == posets.end()) it = posets.emplace(n, sb::build_sblock_poset(n)).first;
    return it->second;
  };
  for (int n = 1; n <= max_n; ++n) {
    const auto& p = poset_of(n);
    add(sb::check_dis(n));
    for (const auto& r : sb::check_structure(p)) add(r);
    for (const auto& r : sb::check_lattice(p)) add(r);
    add(sb::check_ng_bijections(p, poset_of));
  }
  add(sb::check_graphic_criterion(max_sum));
  add(sb::check_realizations(max_sum));
  if (graphs_max_v > 0)
    for (const auto& r : sb::check_graph_theorems(graphs_max_v, threads)) add(r);

  sb::json suites = sb::json::array();
  bool ok = true;
  for (const auto& name : order) {
    ok = ok && merged[name].ok();
    suites.push_back(sb::to_json(merged[name]));
  }
  emit({{"ok", ok}, {"max_n", max_n}, {"max_sum", max_sum}, {"graphs_max_v", graphs_max_v}, {"suites", suites}});
  return ok ? 0 : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-sequence blocks, S-Block(n) and their amphoras"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");

  int n = 0;
  std::optional<int> k;

  auto* dis = app.add_subcommand("dis", "List Dis(n) or Dis_k(n) with its Hasse edges");
  dis->add_option("-n", n, "Integer to partition")->required();
  dis->add_option("-k", k, "Exact number of parts");

  bool labels = false;
  auto* sblock = app.add_subcommand("sblock", "List S-Block(n)");
  sblock->add_option("-n", n, "Half the degree sum")->required();
  sblock->add_flag("--labels", labels, "Attach amphora and NG labels");

  std::string pi_text;
  std::string block_text;
  auto* classify = app.add_subcommand("classify", "Classify a degree sequence or a block");
  classify->add_option("--pi", pi_text, "Degree sequence, e.g. 6,5,2,2,2,1,1,1");
  classify->add_option("--block", block_text, "Block alpha|beta, e.g. \"6,4|7,3\"");

  std::string b1;
  std::string b2;
  auto* meetjoin = app.add_subcommand("meetjoin", "Meet, join and table case of two S-blocks");
  meetjoin->add_option("-n", n, "Half the degree sum")->required();
  meetjoin->add_option("--b1", b1, "First S-block")->required();
  meetjoin->add_option("--b2", b2, "Second S-block")->required();

  auto* amphoras = app.add_subcommand("amphoras", "Amphoras of S-Block(n) and the poset W(n)");
  amphoras->add_option("-n", n, "Half the degree sum")->required();

  int k_required = 0;
  auto* ng3 = app.add_subcommand("ng3", "NG_3(n,k) and its image A(n-4k,k)");
  ng3->add_option("-n", n, "Core sum")->required();
  ng3->add_option("-k", k_required, "Core length")->required();

  std::string target = "dis";
  std::string dot_out;
  auto* hasse = app.add_subcommand("hasse", "Write a Hasse diagram as DOT");
  hasse->add_option("--target", target, "dis, sblock or ng3")
      ->check(CLI::IsMember({"dis", "sblock", "ng3"}));
  hasse->add_option("-n", n, "Integer")->required();
  hasse->add_option("-k", k, "Parts (dis) or core length (ng3)");
  hasse->add_option("--dot", dot_out, "Output file (stdout if omitted)");

  int max_n = 12;
  int graphs_max_v = 6;
  int max_sum = -1;
  unsigned threads = 0;
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--max-n", max_n, "Largest n for the poset suites");
  verify->add_option("--graphs-max-v", graphs_max_v, "Largest vertex count for exhaustive graph checks");
  verify->add_option("--max-sum", max_sum, "Largest degree sum for sequence checks (default 2*max-n)");
  verify->add_option("--threads", threads, "Worker threads for graph checks (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    if (*dis) return run_dis(n, k, pretty);
    if (*sblock) return run_sblock(n, labels, pretty);
    if (*classify) return run_classify(pi_text, block_text, pretty);
    if (*meetjoin) return run_meetjoin(n, b1, b2);
    if (*amphoras) return run_amphoras(n, pretty);
    if (*ng3) return run_ng3(n, k_required);
    if (*hasse) return run_hasse(target, n, k, dot_out);
    if (*verify) return run_verify(max_n, graphs_max_v, max_sum, threads);
  } catch (const sb::block_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const sb::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}
