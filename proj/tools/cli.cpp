#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "braid/errors.hpp"

namespace braid::cli {

namespace {

Json error_json(const std::string& kind, const std::string& message) {
  return {{"error", message}, {"kind", kind}};
}

std::pair<std::string, std::string> split_pair(const std::string& text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos) throw ParseError("compare expects two braids separated by '|'");
  return {text.substr(0, bar), text.substr(bar + 1)};
}

struct BatchLine {
  std::size_t number = 0;
  std::string text;
  std::optional<std::string> label;
};

std::vector<BatchLine> read_batch(std::istream& in) {
  std::vector<BatchLine> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    BatchLine line{number, raw, std::nullopt};
    const auto colon = raw.find(':');
    if (colon != std::string::npos) {
      std::string label = raw.substr(0, colon);
      label.erase(0, label.find_first_not_of(" \t"));
      label.erase(label.find_last_not_of(" \t") + 1);
      line.label = label;
      line.text = raw.substr(colon + 1);
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

int run_batch(const std::string& command, std::istream& in, const Settings& s, std::ostream& out) {
  const std::vector<BatchLine> lines = read_batch(in);
  std::vector<std::pair<Json, int>> results(lines.size());
  const std::size_t workers = std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t k = w; k < lines.size(); k += workers) results[k] = run_line(command, lines[k].text, s);
    }));
  }
  for (auto& j : jobs) j.get();

  int code = kOk;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    Json row = {{"line", lines[k].number}};
    if (lines[k].label) row["label"] = *lines[k].label;
    row.update(results[k].first);
    out << row.dump() << '\n';
    code = std::max(code, results[k].second);
  }
  return code;
}

}  // namespace

Json cmd_wp(const BraidWord& b) {
  return {{"braid", to_string(b)},
          {"identity", is_identity(b)},
          {"pure", is_pure(b)},
          {"permutation", permutation(b).images()},
          {"degree", degree(b)}};
}

Json cmd_compare(const std::string& order, const BraidWord& a, const BraidWord& b, const Settings& s) {
  OrderResult r;
  if (order == "dehornoy") {
    HandleReductionOptions opts;
    opts.budget = s.budget;
    r = dehornoy_compare(a, b, opts);
  } else if (order == "pure") {
    MagnusOptions opts;
    opts.max_degree = s.truncation;
    const int n = std::max(a.strands(), b.strands());
    r = pure_compare(include(a, n), include(b, n), opts);
  } else {
    throw ParseError("unknown order '" + order + "' (expected dehornoy or pure)");
  }
  return {{"order", order}, {"result", to_string(r)}};
}

Json cmd_burau(const BraidWord& b) { return {{"braid", to_string(b)}, {"matrix", matrix_to_json(burau(b))}}; }

Json cmd_modular(const BraidWord& b) { return {{"braid", to_string(b)}, {"matrix", matrix_to_json(modular(b))}}; }

Json cmd_jones(const BraidWord& b) {
  Json j = {{"braid", to_string(b)}};
  j.update(report_to_json(report(b)));
  return j;
}

Json cmd_comb(const BraidWord& b) {
  Json j = {{"braid", to_string(b)}};
  j.update(coordinates_to_json(comb(b)));
  const auto lk = linking_numbers(b);
  Json links = Json::array();
  for (int i = 1; i <= b.strands(); ++i) {
    for (int k = i + 1; k <= b.strands(); ++k) {
      links.push_back({{"pair", {i, k}}, {"lk", lk[linking_index(i, k, b.strands())]}});
    }
  }
  j["linking_numbers"] = std::move(links);
  return j;
}

Json cmd_tl(const BraidWord& b) {
  const TLElement x = jones_rep(b);
  return {{"braid", to_string(b)},
          {"n", b.strands()},
          {"element", tl_to_json(x)},
          {"trace", poly_to_json(markov_trace(x), "A")}};
}

std::pair<Json, int> cmd_fuzz(const std::string& kind, const Settings& s) {
  const int n_max = s.n.value_or(4);
  FuzzReport r;
  if (kind == "markov") {
    r = fuzz_markov(n_max, s.len_max.value_or(10), s.trials, s.seed);
  } else if (kind == "order") {
    HandleReductionOptions handles;
    handles.budget = s.budget;
    MagnusOptions magnus;
    magnus.max_degree = s.truncation;
    r = fuzz_order(n_max, s.len_max.value_or(8), s.trials, s.seed, handles, magnus);
  } else {
    throw ParseError("unknown fuzz kind '" + kind + "' (expected markov or order)");
  }
  Json j = {{"kind", kind}, {"seed", s.seed}, {"n_max", n_max}};
  j.update(fuzz_to_json(r));
  return {j, r.violations == 0 ? kOk : kViolation};
}

std::pair<Json, int> run_line(const std::string& command, const std::string& argument, const Settings& s) {
  try {
    if (command == "fuzz") return cmd_fuzz(argument, s);
    if (command == "compare") {
      // argument is "<order> | <b1> | <b2>" when coming from the command line
      // and "<b1> | <b2>" with the order prefixed by the caller in batch mode.
      const auto [order, rest] = split_pair(argument);
      const auto [left, right] = split_pair(rest);
      std::string name = order;
      name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
      return {cmd_compare(name, parse_braid(left, s.n), parse_braid(right, s.n), s), kOk};
    }
    const BraidWord b = parse_braid(argument, s.n);
    if (command == "wp") return {cmd_wp(b), kOk};
    if (command == "burau") return {cmd_burau(b), kOk};
    if (command == "modular") return {cmd_modular(b), kOk};
    if (command == "jones") return {cmd_jones(b), kOk};
    if (command == "comb") return {cmd_comb(b), kOk};
    if (command == "tl") return {cmd_tl(b), kOk};
    throw ParseError("unknown command '" + command + "'");
  } catch (const ParseError& e) {
    return {error_json("parse", e.what()), kParseError};
  } catch (const RangeError& e) {
    return {error_json("parse", e.what()), kParseError};
  } catch (const DomainError& e) {
    return {error_json("domain", e.what()), kDomainError};
  } catch (const BudgetExceeded& e) {
    return {error_json("budget", e.what()), kBudgetExceeded};
  } catch (const ArithmeticOverflow& e) {
    return {error_json("budget", e.what()), kBudgetExceeded};
  } catch (const InternalError& e) {
    return {error_json("internal", e.what()), kViolation};
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the Artin braid groups"};
  app.require_subcommand(1);

  Settings s;
  std::optional<int> n;
  std::string file;
  app.add_option("--n", n, "Strand count (or n_max for fuzz)")->check(CLI::PositiveNumber);
  app.add_option("--seed", s.seed, "Random seed");
  app.add_option("--trials", s.trials, "Fuzz trials");
  app.add_option("--len-max", s.len_max, "Maximum random word length for fuzz");
  app.add_option("--budget", s.budget, "Handle-reduction rewrite budget");
  app.add_option("--truncation", s.truncation, "Largest Magnus truncation degree")->check(CLI::PositiveNumber);
  app.add_option("--file", file, "Batch file, one braid per line ('-' for stdin)");

  std::string braid_text;
  std::string order;
  std::string second;
  std::string kind;
  struct Single {
    const char* name;
    const char* help;
  };
  const Single singles[] = {{"wp", "Word problem: identity, purity, permutation, degree"},
                            {"burau", "Unreduced Burau matrix"},
                            {"modular", "Image in SL(2,Z) of a 3-braid"},
                            {"jones", "Bracket, writhe, f and Jones polynomial of the closure"},
                            {"comb", "Artin coordinates and linking numbers of a pure braid"},
                            {"tl", "Temperley-Lieb image and its Markov trace"}};
  for (const auto& single : singles) {
    auto* sub = app.add_subcommand(single.name, single.help);
    sub->fallthrough();
    sub->add_option("braid", braid_text, "Braid text, e.g. \"n=3; 1 -2\"");
  }
  auto* compare = app.add_subcommand("compare", "Compare two braids (dehornoy or pure order)");
  compare->fallthrough();
  compare->add_option("order", order)->required()->check(CLI::IsMember({"dehornoy", "pure"}));
  compare->add_option("first", braid_text);
  compare->add_option("second", second);
  auto* fuzz = app.add_subcommand("fuzz", "Randomized property checks (markov or order)");
  fuzz->fallthrough();
  fuzz->add_option("kind", kind)->required()->check(CLI::IsMember({"markov", "order"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kParseError;
  }
  s.n = n;

  const std::string command = app.get_subcommands().front()->get_name();
  if (!file.empty()) {
    if (command == "fuzz") {
      err << "--file is not supported for fuzz\n";
      return kParseError;
    }
    const std::string prefix = command == "compare" ? order + " | " : "";
    auto run_stream = [&](std::istream& in) {
      if (prefix.empty()) return run_batch(command, in, s, out);
      std::stringstream prefixed;
      std::string line;
      while (std::getline(in, line)) {
        const auto colon = line.find(':');
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
          prefixed << line << '\n';
        } else if (colon != std::string::npos) {
          prefixed << line.substr(0, colon + 1) << prefix << line.substr(colon + 1) << '\n';
        } else {
          prefixed << prefix << line << '\n';
        }
      }
      return run_batch(command, prefixed, s, out);
    };
    if (file == "-") return run_stream(std::cin);
    std::ifstream in(file);
    if (!in) {
      err << "cannot open " << file << '\n';
      return kParseError;
    }
    return run_stream(in);
  }

  std::string argument = braid_text;
  if (command == "compare") argument = order + " | " + braid_text + " | " + second;
  if (command == "fuzz") argument = kind;
  auto [json, code] = run_line(command, argument, s);
  out << json.dump() << '\n';
  if (json.contains("error")) err << json["error"].get<std::string>() << '\n';
  return code;
}

}  // namespace braid::cli
