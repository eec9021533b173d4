// clucat - cluster combinatorics of Dynkin root systems.
//
// Subcommands: roots, compat, clusters, exchange, verify.
// Exit codes: 0 success, 1 verification failure, 2 usage/config error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "clucat/io.hpp"
#include "clucat/verify.hpp"

namespace fs = std::filesystem;
using namespace clucat;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<DynkinComponent> parse_type(const std::string& spec) {
  std::vector<DynkinComponent> comps;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    char letter = (char)std::toupper((unsigned char)token[0]);
    std::string digits = token.substr(1);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("bad type component '" + token + "'");
    comps.push_back({letter, std::stoi(digits)});
    token.clear();
  };
  for (char c : spec) {
    if (c == 'x' || c == 'X' || c == ',') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  if (comps.empty()) throw UsageError("empty type spec");
  return comps;
}

ValuedGraph build_from_spec(const std::string& spec) {
  try {
    return build_diagram(parse_type(spec));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// "alternating", "arrows:1>2,2>3", or "sinks:2,1" (sink sequence applied
// to the alternating orientation).
Orientation parse_orientation(const ValuedGraph& g, const std::string& spec) {
  if (spec.empty() || spec == "alternating") return alternating_orientation(g);
  auto colon = spec.find(':');
  std::string kind = colon == std::string::npos ? "arrows" : spec.substr(0, colon);
  std::string body = colon == std::string::npos ? spec : spec.substr(colon + 1);
  if (kind == "sinks") {
    Orientation o = alternating_orientation(g);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      int v = std::stoi(item) - 1;
      if (v < 0 || v >= g.n) throw UsageError("sink vertex out of range");
      if (!is_sink(g, o, v))
        throw UsageError("vertex " + item + " is not a sink at that step");
      o = reverse_at(g, o, v);
    }
    return o;
  }
  if (kind != "arrows") throw UsageError("unknown orientation selector");
  Orientation o;
  o.arrows.assign(g.edges.size(), {-1, -1});
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto gt = item.find('>');
    if (gt == std::string::npos) throw UsageError("bad arrow '" + item + "'");
    int from = std::stoi(item.substr(0, gt)) - 1;
    int to = std::stoi(item.substr(gt + 1)) - 1;
    bool found = false;
    for (size_t e = 0; e < g.edges.size(); ++e) {
      const auto& ed = g.edges[e];
      if ((ed.i == from && ed.j == to) || (ed.i == to && ed.j == from)) {
        if (o.arrows[e].first != -1)
          throw UsageError("edge oriented twice: " + item);
        o.arrows[e] = {from, to};
        found = true;
      }
    }
    if (!found) throw UsageError("no such edge: " + item);
  }
  for (auto [from, to] : o.arrows)
    if (from == -1) throw UsageError("orientation leaves an edge undirected");
  return o;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw UsageError("cannot write " + out_path);
  f << text;
}

std::string golden_path(const std::string& dir, const std::string& label,
                        const std::string& what) {
  return dir + "/" + label + "_" + what;
}

json golden_summary(const ValuedGraph& g, const CompatTable& table) {
  json j;
  j["type"] = g.label();
  j["positive_roots"] = (int)positive_roots(g).size();
  auto clusters = enumerate_clusters(g, table);
  j["clusters"] = (int)clusters.size();
  json cox = json::array();
  for (const auto& cd : coxeter_data_components(g))
    cox.push_back({{"h", cd.h}, {"exponents", cd.exponents}});
  j["coxeter"] = cox;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cluster combinatorics of Dynkin root systems"};
  app.require_subcommand(1);

  std::string type_spec, orientation_spec, format, out_path;
  std::string alpha_text, beta_text, golden_dir;
  bool all_pairs = false, with_omega = false, expensive = false;
  bool update_golden = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--type", type_spec, "Dynkin type, e.g. A3, B2, A2xA1")
        ->required();
    cmd->add_option("--out", out_path, "write output to file");
  };

  auto* cmd_roots = app.add_subcommand("roots", "list almost positive roots");
  add_common(cmd_roots);
  cmd_roots->add_option("--format", format, "text|json");

  auto* cmd_compat = app.add_subcommand("compat", "compatibility degrees");
  add_common(cmd_compat);
  cmd_compat->add_option("--alpha", alpha_text, "root as integer array");
  cmd_compat->add_option("--beta", beta_text, "root as integer array");
  cmd_compat->add_flag("--all", all_pairs, "full degree matrix as CSV");
  cmd_compat->add_flag("--omega", with_omega,
                       "also compute the representation-side degree");
  cmd_compat->add_option("--orientation", orientation_spec,
                         "alternating | arrows:1>2,... | sinks:2,...");

  auto* cmd_clusters = app.add_subcommand("clusters", "enumerate clusters");
  add_common(cmd_clusters);
  cmd_clusters->add_option("--format", format, "text|json");

  auto* cmd_exchange = app.add_subcommand("exchange", "exchange graph");
  add_common(cmd_exchange);
  cmd_exchange->add_option("--format", format, "dot|json");

  auto* cmd_verify = app.add_subcommand("verify", "run the invariant suite");
  add_common(cmd_verify);
  cmd_verify->add_flag("--expensive", expensive, "include large checks");
  cmd_verify->add_flag("--update-golden", update_golden,
                       "regenerate golden files");
  cmd_verify->add_option("--golden-dir", golden_dir,
                         "directory of golden files");
  cmd_verify->add_option("--orientation", orientation_spec,
                         "orientation for representation-side checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    ValuedGraph g = build_from_spec(type_spec);
    RootIndex index(g);

    if (cmd_roots->parsed()) {
      if (format == "json") {
        emit(roots_to_json(index).dump(2) + "\n", out_path);
      } else {
        std::ostringstream os;
        for (int id = 0; id < index.size(); ++id) {
          os << id << "\t" << json(index.list[id]).dump() << "\n";
        }
        emit(os.str(), out_path);
      }
      return 0;
    }

    if (cmd_compat->parsed()) {
      CompatTable table(g);
      if (all_pairs) {
        std::string csv = degree_matrix_csv(table.degree);
        emit(csv, out_path);
        return 0;
      }
      if (alpha_text.empty() || beta_text.empty())
        throw UsageError("compat needs --alpha and --beta (or --all)");
      Root alpha, beta;
      try {
        alpha = parse_root(alpha_text, g.n);
        beta = parse_root(beta_text, g.n);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (!index.contains(alpha) || !index.contains(beta))
        throw UsageError("input is not an almost positive root");
      int fz = table.degree[index.id(alpha)][index.id(beta)];
      std::ostringstream os;
      os << fz << "\n";
      if (with_omega) {
        if (!g.simply_laced())
          throw UsageError("--omega requires a simply-laced type");
        Orientation o = parse_orientation(g, orientation_spec);
        int om = omega_compat_degree(g, o, index, alpha, beta);
        os << "omega: " << om << "\n"
           << "agreement: " << (om == fz ? "yes" : "no") << "\n";
      }
      emit(os.str(), out_path);
      return 0;
    }

    if (cmd_clusters->parsed()) {
      CompatTable table(g);
      auto clusters = enumerate_clusters(g, table);
      if (format == "json") {
        emit(clusters_to_json(index, clusters).dump(2) + "\n", out_path);
      } else {
        std::ostringstream os;
        os << "count: " << clusters.size() << "\n";
        for (const auto& c : clusters) {
          for (size_t i = 0; i < c.size(); ++i)
            os << (i ? " " : "") << json(index.list[c[i]]).dump();
          os << "\n";
        }
        emit(os.str(), out_path);
      }
      return 0;
    }

    if (cmd_exchange->parsed()) {
      CompatTable table(g);
      auto clusters = enumerate_clusters(g, table);
      ExchangeGraph eg = exchange_graph(clusters, g.n);
      bool regular = true;
      for (const auto& adj : eg.adjacency)
        if ((int)adj.size() != g.n) regular = false;
      if (format == "dot") {
        emit(exchange_to_dot(index, eg), out_path);
      } else {
        emit(exchange_to_json(eg).dump(2) + "\n", out_path);
      }
      std::cerr << "clusters: " << clusters.size()
                << ", n-regular: " << (regular ? "yes" : "no") << "\n";
      return regular ? 0 : 1;
    }

    if (cmd_verify->parsed()) {
      VerifyOptions opts;
      opts.expensive = expensive;
      auto results = verify_suite(g, opts);
      json report = verify_report(g.label(), results);

      CompatTable table(g);
      if (update_golden) {
        if (golden_dir.empty()) golden_dir = "goldens";
        fs::create_directories(golden_dir);
        std::ofstream(golden_path(golden_dir, g.label(), "summary.json"))
            << golden_summary(g, table).dump(2) << "\n";
        std::ofstream(golden_path(golden_dir, g.label(), "degree.csv"))
            << degree_matrix_csv(table.degree);
        std::ofstream(golden_path(golden_dir, g.label(), "roots.json"))
            << roots_to_json(index).dump(2) << "\n";
      } else if (!golden_dir.empty()) {
        auto check_file = [&](const std::string& path, const std::string& fresh,
                              const char* name) {
          std::ifstream f(path);
          if (!f) return;  // no golden committed for this type/file
          std::stringstream buf;
          buf << f.rdbuf();
          bool ok = buf.str() == fresh;
          report["properties"].push_back(
              {{"name", std::string("golden-") + name},
               {"status", ok ? "pass" : "fail"}});
          if (!ok) report["ok"] = false;
        };
        check_file(golden_path(golden_dir, g.label(), "summary.json"),
                   golden_summary(g, table).dump(2) + "\n", "summary");
        check_file(golden_path(golden_dir, g.label(), "degree.csv"),
                   degree_matrix_csv(table.degree), "degree");
        check_file(golden_path(golden_dir, g.label(), "roots.json"),
                   roots_to_json(index).dump(2) + "\n", "roots");
      }

      emit(report.dump(2) + "\n", out_path);
      return report["ok"].get<bool>() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
