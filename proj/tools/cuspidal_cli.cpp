// Command-line front end: canonical tilings, cuspidal ribbons, shape
// classification, and the self-check oracle suite.
//
// Exit codes: 0 success, 1 verification failure, 2 bad shape, 3 bad
// preorder, 4 enumeration cap exceeded.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cuspidal/cuspidal.hpp"
#include "cuspidal/dilation.hpp"
#include "cuspidal/json_io.hpp"
#include "cuspidal/oracles.hpp"
#include "cuspidal/preorder.hpp"
#include "cuspidal/render.hpp"
#include "cuspidal/roots.hpp"
#include "cuspidal/shape.hpp"
#include "cuspidal/tiling.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadShape = 2;
constexpr int kExitBadPreorder = 3;
constexpr int kExitCapExceeded = 4;
constexpr int kHardNodeCap = 12;

struct Options {
  std::string preset = "bigex";
  std::string h_spec;  // "x,y;x,y;..." overrides the preset
  bool reverse = false;
  int e = 0;  // 0 = take it from the preset / h-assignment
  std::string skew_spec;
  std::string nodes_file;
  std::string root_spec;
  int init_residue = -1;
  bool strict = false;
  bool json = false;
  std::string svg_path;
  int max_nodes = 6;
  int height_bound = 12;
};

struct ExitWith {
  int code;
  std::string message;
};

std::vector<cusp::Int> parse_int_list(const std::string& text,
                                      const std::string& what) {
  std::vector<cusp::Int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw ExitWith{kExitBadShape, what + ": '" + item + "' is not an integer"};
    }
  }
  return out;
}

cusp::ConvexPreorder build_preorder(const Options& opt) {
  try {
    if (!opt.h_spec.empty()) {
      std::vector<std::array<cusp::Int, 2>> h;
      std::stringstream ss(opt.h_spec);
      std::string pair_text;
      while (std::getline(ss, pair_text, ';')) {
        auto xy = parse_int_list(pair_text, "--h");
        if (xy.size() != 2)
          throw ExitWith{kExitBadPreorder,
                         "--h: expected pairs like '2,1;-1,0;-1,-1'"};
        h.push_back({xy[0], xy[1]});
      }
      int e = opt.e > 0 ? opt.e : static_cast<int>(h.size());
      auto pre = cusp::ConvexPreorder::functional(e, h);
      return opt.reverse ? pre.reversed() : pre;
    }
    auto pre = cusp::ConvexPreorder::preset(opt.preset);
    if (opt.e > 0 && opt.e != pre.e())
      throw ExitWith{kExitBadPreorder,
                     "--e disagrees with preset '" + opt.preset + "'"};
    return opt.reverse ? pre.reversed() : pre;
  } catch (const ExitWith&) {
    throw;
  } catch (const std::exception& ex) {
    throw ExitWith{kExitBadPreorder, std::string("bad preorder: ") + ex.what()};
  }
}

// Abort unless the preorder satisfies the convexity axioms up to the
// configured height bound.
void gate_axioms(const cusp::ConvexPreorder& pre, int height_bound) {
  cusp::AxiomReport rep = cusp::verify_axioms(pre, height_bound);
  if (rep.ok()) return;
  std::ostringstream os;
  os << "preorder fails the convexity axioms (height bound "
     << rep.height_bound << "):";
  for (const auto& v : rep.violations)
    os << "\n  " << v.axiom << ": " << v.witness;
  throw ExitWith{kExitBadPreorder, os.str()};
}

cusp::Shape ingest_shape(const Options& opt, int e) {
  try {
    if (!opt.nodes_file.empty()) {
      std::ifstream in(opt.nodes_file);
      if (!in)
        throw ExitWith{kExitBadShape,
                       "cannot open nodes file '" + opt.nodes_file + "'"};
      std::stringstream buffer;
      buffer << in.rdbuf();
      return cusp::shape_from_json(buffer.str());
    }
    if (!opt.skew_spec.empty()) {
      // 'lambda/mu/charge' with comma-separated parts; mu may be empty.
      std::vector<std::string> parts;
      std::string text = opt.skew_spec;
      std::size_t start = 0;
      while (true) {
        std::size_t slash = text.find('/', start);
        parts.push_back(text.substr(
            start, slash == std::string::npos ? slash : slash - start));
        if (slash == std::string::npos) break;
        start = slash + 1;
      }
      if (parts.size() > 3)
        throw ExitWith{kExitBadShape,
                       "--skew: expected 'lambda/mu/charge' (mu may be empty)"};
      auto lambda = parse_int_list(parts[0], "--skew lambda");
      auto mu = parts.size() > 1 ? parse_int_list(parts[1], "--skew mu")
                                 : std::vector<cusp::Int>{};
      int charge = 0;
      if (parts.size() > 2 && !parts[2].empty()) {
        auto c = parse_int_list(parts[2], "--skew charge");
        if (c.size() != 1)
          throw ExitWith{kExitBadShape, "--skew: charge must be one integer"};
        charge = static_cast<int>(c[0]);
      }
      charge = ((charge % e) + e) % e;
      return cusp::from_skew_partition(lambda, mu, charge);
    }
    throw ExitWith{kExitBadShape, "no shape given: use --skew or --nodes-file"};
  } catch (const ExitWith&) {
    throw;
  } catch (const std::exception& ex) {
    throw ExitWith{kExitBadShape, std::string("bad shape: ") + ex.what()};
  }
}

cusp::RootVector parse_root(const std::string& spec, int e) {
  if (spec == "delta") return cusp::RootVector::delta(e);
  if (spec.rfind("alpha", 0) == 0) {
    try {
      int i = std::stoi(spec.substr(5));
      return cusp::RootVector::simple(e, i);
    } catch (const std::exception&) {
      throw ExitWith{kExitBadShape, "bad root '" + spec + "'"};
    }
  }
  auto coeffs = parse_int_list(spec, "--root");
  if (static_cast<int>(coeffs.size()) != e)
    throw ExitWith{kExitBadShape, "--root: expected " + std::to_string(e) +
                                      " coefficients, 'delta', or 'alphaK'"};
  return cusp::RootVector(e, coeffs);
}

cusp::RenderOptions render_options() {
  cusp::RenderOptions opts;
  const char* env = std::getenv("CUSPIDAL_COLOR");
  std::string mode = env ? env : "auto";
  opts.color = mode == "auto" ? isatty(fileno(stdout)) : false;
  return opts;
}

void maybe_write_svg(const Options& opt, const cusp::Shape& s, int e) {
  if (opt.svg_path.empty()) return;
  cusp::RenderOptions ro;
  ro.format = cusp::RenderOptions::Format::Svg;
  std::ofstream out(opt.svg_path);
  out << cusp::render_shape(s, e, ro);
}

void maybe_write_svg(const Options& opt, const cusp::GammaTiling& g, int e) {
  if (opt.svg_path.empty()) return;
  cusp::RenderOptions ro;
  ro.format = cusp::RenderOptions::Format::Svg;
  std::ofstream out(opt.svg_path);
  out << cusp::render_tiling(g, e, ro);
}

int cmd_tile(const Options& opt) {
  auto pre = build_preorder(opt);
  gate_axioms(pre, opt.height_bound);
  cusp::Shape host = ingest_shape(opt, pre.e());
  cusp::GammaTiling g;
  try {
    g = opt.strict ? cusp::gamma_sc_tiling(host, pre)
                   : cusp::gamma_tiling(host, pre);
  } catch (const std::exception& ex) {
    throw ExitWith{kExitBadShape, std::string("bad shape: ") + ex.what()};
  }
  std::cout << g.partition.to_string(pre) << "\n";
  std::cout << cusp::render_tiling(g, pre.e(), render_options());
  if (opt.json) std::cout << cusp::tiling_to_json(g, pre) << "\n";
  maybe_write_svg(opt, g, pre.e());
  return kExitOk;
}

int cmd_ribbon(const Options& opt) {
  auto pre = build_preorder(opt);
  gate_axioms(pre, opt.height_bound);
  cusp::RootVector root = parse_root(opt.root_spec, pre.e());
  cusp::CuspidalRibbon rib;
  try {
    int init = opt.init_residue;
    if (init < 0) {
      auto form = cusp::positive_root_form(root);
      init = form ? form->t : 0;
    }
    rib = cusp::cuspidal_ribbon(root, cusp::Node{0, init}, pre);
  } catch (const std::exception& ex) {
    throw ExitWith{kExitBadShape, std::string("bad ribbon: ") + ex.what()};
  }
  std::cout << "root: " << cusp::root_name(root) << "\n";
  std::cout << "steps: " << cusp::ribbon_path(rib.shape).value_or("") << "\n";
  std::cout << cusp::render_shape(rib.shape, pre.e(), render_options());
  if (opt.json) std::cout << cusp::shape_to_json(rib.shape) << "\n";
  maybe_write_svg(opt, rib.shape, pre.e());
  return kExitOk;
}

int cmd_check(const Options& opt) {
  auto pre = build_preorder(opt);
  gate_axioms(pre, opt.height_bound);
  cusp::Shape s = ingest_shape(opt, pre.e());
  cusp::ShapeClass cls = cusp::validate(s);
  if (!cls.skew || s.empty())
    throw ExitWith{kExitBadShape, "input is not a nonempty skew shape"};
  cusp::RootVector theta = cusp::content(s, pre.e());
  std::cout << "content: " << cusp::root_name(theta) << "\n";
  std::cout << "connected: " << (cls.connected ? "true" : "false") << "\n";
  bool cuspidal = cusp::is_cuspidal(s, pre);
  bool semi = cusp::is_semicuspidal(s, pre);
  std::cout << "cuspidal: " << (cuspidal ? "true" : "false") << "\n";
  std::cout << "semicuspidal: " << (semi ? "true" : "false") << "\n";
  if (auto un = cusp::undilate(s, pre)) {
    std::cout << "undilation: t=" << un->first
              << ", core=" << cusp::to_string(un->second) << "\n";
  } else {
    std::cout << "undilation: none\n";
  }
  std::string match = "none";
  int bound = static_cast<int>(s.size());
  for (const auto& rep :
       cusp::cuspidal_representatives(pre, std::max(bound, pre.e())))
    if (static_cast<std::size_t>(rep.shape.size()) == s.size() &&
        cusp::e_similar(s, rep.shape, pre.e())) {
      match = cusp::root_name(rep.root);
      if (cusp::classify(rep.root).kind == cusp::RootKind::ImaginaryRoot)
        match += " (initial residue " +
                 std::to_string(cusp::residue(rep.base, pre.e())) + ")";
      break;
    }
  std::cout << "canonical ribbon match: " << match << "\n";
  if (opt.json) std::cout << cusp::shape_to_json(s) << "\n";
  maybe_write_svg(opt, s, pre.e());
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  auto pre = build_preorder(opt);
  if (opt.max_nodes > kHardNodeCap)
    throw ExitWith{kExitCapExceeded,
                   "--max-nodes exceeds the hard cap of " +
                       std::to_string(kHardNodeCap)};
  bool all_ok = true;
  cusp::AxiomReport axioms = cusp::verify_axioms(pre, opt.height_bound);
  std::cout << (axioms.ok() ? "PASS" : "FAIL") << " preorder-axioms ("
            << axioms.cases_checked << " cases)\n";
  for (const auto& v : axioms.violations)
    std::cout << "  " << v.axiom << ": " << v.witness << "\n";
  all_ok = all_ok && axioms.ok();

  try {
    const int window_nodes = std::min(opt.max_nodes, kHardNodeCap);
    for (const cusp::OracleReport& rep : {
             cusp::oracle_gamma_uniqueness(pre, 5, 5, window_nodes),
             cusp::oracle_bilex_maximality(pre, 5, 5, opt.max_nodes),
             cusp::oracle_cuspidal_classification(pre, opt.max_nodes),
             cusp::oracle_semicuspidal_agreement(pre, opt.max_nodes),
             cusp::oracle_dilation_recognition(pre, opt.max_nodes),
         }) {
      std::cout << (rep.passed ? "PASS" : "FAIL") << " " << rep.name << " ("
                << rep.cases << " cases): " << rep.detail << "\n";
      all_ok = all_ok && rep.passed;
    }
  } catch (const cusp::CapExceeded& ex) {
    throw ExitWith{kExitCapExceeded, ex.what()};
  }
  return all_ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cuspidal and semicuspidal skew shape toolkit"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "Print this help message and exit");
    sub->add_option("--preset", opt.preset,
                    "Preorder preset: bigex or e2-standard (default bigex)");
    sub->add_option("--h", opt.h_spec,
                    "Functional preorder, pairs 'x,y;x,y;...' (one per residue)");
    sub->add_flag("--reverse", opt.reverse, "Reverse the preorder");
    sub->add_option("--e", opt.e, "Number of residues (checked vs preset)");
    sub->add_option("--height-bound", opt.height_bound,
                    "Axiom verification height bound (default 12)");
    sub->add_flag("--json", opt.json, "Append machine-readable JSON output");
    sub->add_option("--svg", opt.svg_path, "Write an SVG rendering here");
  };
  auto add_shape = [&](CLI::App* sub) {
    sub->add_option("--skew", opt.skew_spec,
                    "Skew partition 'lambda/mu/charge', e.g. '6,5//0'");
    sub->add_option("--nodes-file", opt.nodes_file,
                    "File with a JSON shape document");
  };

  CLI::App* tile = app.add_subcommand(
      "tile", "Canonical cuspidal tiling and Kostant partition of a shape");
  add_common(tile);
  add_shape(tile);
  tile->add_flag("--strict", opt.strict,
                 "Merge equal-content tiles (semicuspidal tiling)");

  CLI::App* ribbon = app.add_subcommand(
      "ribbon", "Canonical cuspidal ribbon of a positive root");
  add_common(ribbon);
  ribbon->add_option("--root", opt.root_spec,
                     "Root: coefficients 'c0,c1,...', 'delta', or 'alphaK'")
      ->required();
  ribbon->add_option("--init", opt.init_residue,
                     "Initial residue (imaginary roots)");

  CLI::App* check =
      app.add_subcommand("check", "Classify a shape: cuspidal, semicuspidal, "
                                  "undilation, canonical ribbon match");
  add_common(check);
  add_shape(check);

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the preorder axiom checks and the oracle suite");
  add_common(verify);
  verify->add_option("--max-nodes", opt.max_nodes,
                     "Exhaustive sweep size (default 6, hard cap 12)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tile->parsed()) return cmd_tile(opt);
    if (ribbon->parsed()) return cmd_ribbon(opt);
    if (check->parsed()) return cmd_check(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const ExitWith& ex) {
    std::cerr << "error: " << ex.message << "\n";
    return ex.code;
  } catch (const cusp::CapExceeded& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitBadShape;
  }
  return kExitOk;
}
