// Command-line front end for the fold calculus toolkit.
//
//   kirby catalog <name> [params...]        emit a catalog handle diagram
//   kirby invariants <file|->               invariants of a handle diagram
//   kirby double-cover <file|->             orientation double cover
//   sblf validate <file|->                  monodromy certification report
//   sblf build <file|->                     handle diagram of a fibration
//   sblf classify <file|->                  genus-two classification
//   diagram apply <file|-> --script <f|->   replay a move script
//   diagram simplify <file|->               run the normal-form strategy
//   diagram trisect <file|-> [--simplify]   convert to a trisection
//   surgery standardize --pi1 <f|-> --chi <n> --cobordism rp4|s2xrp2
//   corpus run [names...] [--all]           replay the worked examples
//
// `-` means standard input. `--format json|pretty|svg` selects the encoding
// (svg is available when the result is a base diagram or handle diagram);
// `-o <file>` redirects output. Exit codes: 0 success, 1 parse or usage
// error, 2 precondition violation, 3 corpus mismatch.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "foldcalc/basediagram.hpp"
#include "foldcalc/corpus.hpp"
#include "foldcalc/error.hpp"
#include "foldcalc/io.hpp"
#include "foldcalc/kirby.hpp"
#include "foldcalc/render.hpp"
#include "foldcalc/sblf.hpp"
#include "foldcalc/surgery.hpp"

namespace {

using namespace foldcalc;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("ParseError", "cannot open input file '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

std::string diagram_state(const basediagram::BaseDiagram& d) {
  int cusps = 0, pending = 0;
  for (const basediagram::FoldCircle& c : d.circles) {
    cusps += c.cusps;
    pending += c.pending;
  }
  return "circles " + std::to_string(d.circles.size()) + ", cusps " +
         std::to_string(cusps) + ", pending " + std::to_string(pending) +
         ", chi " + std::to_string(basediagram::total_euler_char(d));
}

std::vector<corpus::CorpusEntry> load_corpus() {
  const char* dir = std::getenv("FOLDCALC_CORPUS_DIR");
  if (dir == nullptr || *dir == '\0') return corpus::bundled_entries();

  namespace fs = std::filesystem;
  std::error_code ec;
  fs::directory_iterator it(dir, ec);
  if (ec) fail("ParseError", "cannot read corpus directory '" + std::string(dir) + "'");
  std::vector<fs::path> files;
  for (const fs::directory_entry& entry : it) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<corpus::CorpusEntry> entries;
  for (const fs::path& p : files) {
    entries.push_back(corpus::entry_from_json(read_input(p.string())));
  }
  return entries;
}

CLI::App* sub(CLI::App* parent, const std::string& name, const std::string& desc) {
  CLI::App* s = parent->add_subcommand(name, desc);
  s->fallthrough();
  return s;
}

int run(int argc, char** argv) {
  CLI::App app{"fold calculus toolkit: handle diagrams, broken fibrations, "
               "base-diagram moves, trisections, and surgery schedules"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  bool pretty_flag = false;
  std::string out_path;
  app.add_option("--format", format, "output encoding")
      ->check(CLI::IsMember({"json", "pretty", "svg"}));
  app.add_flag("--pretty", pretty_flag, "indent JSON output");
  app.add_option("-o,--output", out_path, "write output to a file instead of stdout");

  std::string output;       // filled by exactly one subcommand callback
  bool corpus_failed = false;

  const auto pretty = [&] { return pretty_flag || format == "pretty"; };
  const auto want_svg = [&] { return format == "svg"; };
  const auto no_svg = [&] {
    if (want_svg()) fail("ParseError", "this subcommand has no SVG form");
  };
  const auto emit_kirby = [&](const kirby::HandleDecomposition& h) {
    output = want_svg() ? render::kirby_svg(h) : io::to_json(h, pretty()) + "\n";
  };
  const auto emit_diagram_or = [&](const basediagram::BaseDiagram& d,
                                   const std::string& json_text) {
    output = want_svg() ? render::diagram_svg(d) : json_text + "\n";
  };

  // ---- kirby ---------------------------------------------------------------
  CLI::App* kirby_app = sub(&app, "kirby", "handle decompositions");
  kirby_app->require_subcommand(1);

  auto catalog_name = std::make_shared<std::string>();
  auto catalog_params = std::make_shared<std::vector<int>>();
  CLI::App* kirby_catalog = sub(kirby_app, "catalog", "emit a named catalog diagram");
  kirby_catalog->add_option("name", *catalog_name, "catalog family")->required();
  kirby_catalog->add_option("params", *catalog_params, "family parameters");
  kirby_catalog->callback([&, catalog_name, catalog_params] {
    emit_kirby(kirby::catalog(*catalog_name, *catalog_params));
  });

  auto kirby_in = std::make_shared<std::string>();
  CLI::App* kirby_inv = sub(kirby_app, "invariants", "invariants of a handle diagram");
  kirby_inv->add_option("input", *kirby_in, "handle diagram JSON file or -")->required();
  kirby_inv->callback([&, kirby_in] {
    no_svg();
    const kirby::HandleDecomposition h = io::kirby_from_json(read_input(*kirby_in));
    output = io::to_json(kirby::invariants(h), pretty()) + "\n";
  });

  auto cover_in = std::make_shared<std::string>();
  CLI::App* kirby_cover = sub(kirby_app, "double-cover", "orientation double cover");
  kirby_cover->add_option("input", *cover_in, "handle diagram JSON file or -")->required();
  kirby_cover->callback([&, cover_in] {
    emit_kirby(kirby::double_cover(io::kirby_from_json(read_input(*cover_in))));
  });

  // ---- sblf ----------------------------------------------------------------
  CLI::App* sblf_app = sub(&app, "sblf", "simplified broken Lefschetz fibrations");
  sblf_app->require_subcommand(1);

  auto validate_in = std::make_shared<std::string>();
  CLI::App* sblf_validate = sub(sblf_app, "validate", "certify monodromy data");
  sblf_validate->add_option("input", *validate_in, "fibration JSON file or -")->required();
  sblf_validate->callback([&, validate_in] {
    no_svg();
    const sblf::SblfData d = io::sblf_from_json(read_input(*validate_in));
    output = io::to_json(sblf::validate(d), pretty()) + "\n";
  });

  auto build_in = std::make_shared<std::string>();
  CLI::App* sblf_build = sub(sblf_app, "build", "handle diagram of a fibration");
  sblf_build->add_option("input", *build_in, "fibration JSON file or -")->required();
  sblf_build->callback([&, build_in] {
    emit_kirby(sblf::build_kirby(io::sblf_from_json(read_input(*build_in))));
  });

  auto classify_in = std::make_shared<std::string>();
  CLI::App* sblf_classify = sub(sblf_app, "classify", "genus-two classification");
  sblf_classify->add_option("input", *classify_in, "fibration JSON file or -")->required();
  sblf_classify->callback([&, classify_in] {
    no_svg();
    const sblf::SblfData d = io::sblf_from_json(read_input(*classify_in));
    output = io::to_json(sblf::classify_genus2(d), pretty()) + "\n";
  });

  // ---- diagram ---------------------------------------------------------------
  CLI::App* diagram_app = sub(&app, "diagram", "base diagrams and moves");
  diagram_app->require_subcommand(1);

  auto apply_in = std::make_shared<std::string>();
  auto script_in = std::make_shared<std::string>();
  CLI::App* diagram_apply = sub(diagram_app, "apply", "replay a move script");
  diagram_apply->add_option("input", *apply_in, "base diagram JSON file or -")->required();
  diagram_apply->add_option("--script", *script_in, "move script JSON file or -")->required();
  diagram_apply->callback([&, apply_in, script_in] {
    basediagram::BaseDiagram d = io::diagram_from_json(read_input(*apply_in));
    const std::vector<io::ScriptItem> script = io::script_from_json(read_input(*script_in));
    std::vector<std::string> ledger;
    ledger.push_back("start: " + diagram_state(d));
    int position = 0;
    for (const io::ScriptItem& item : script) {
      if (item.checkpoint) {
        if (!(d == *item.checkpoint)) {
          fail("InvalidData", "script checkpoint at step " + std::to_string(position) +
                                  " does not match the replayed state (" +
                                  diagram_state(d) + ")");
        }
        ledger.push_back("checkpoint ok: " + diagram_state(d));
      } else {
        d = basediagram::apply_move(d, *item.move);
        ledger.push_back(item.move->name + " -> " + diagram_state(d));
      }
      ++position;
    }
    nlohmann::json j;
    j["result"] = nlohmann::json::parse(io::to_json(d));
    j["ledger"] = ledger;
    emit_diagram_or(d, pretty() ? j.dump(2) : j.dump());
  });

  auto simplify_in = std::make_shared<std::string>();
  CLI::App* diagram_simplify = sub(diagram_app, "simplify", "run the normal-form strategy");
  diagram_simplify->add_option("input", *simplify_in, "base diagram JSON file or -")->required();
  diagram_simplify->callback([&, simplify_in] {
    const basediagram::SimplifyResult r =
        basediagram::simplify_to_sblf(io::diagram_from_json(read_input(*simplify_in)));
    emit_diagram_or(r.result, io::to_json(r, pretty()));
  });

  auto trisect_in = std::make_shared<std::string>();
  auto trisect_simplify = std::make_shared<bool>(false);
  CLI::App* diagram_trisect = sub(diagram_app, "trisect", "convert to a trisection");
  diagram_trisect->add_option("input", *trisect_in, "base diagram JSON file or -")->required();
  diagram_trisect->add_flag("--simplify", *trisect_simplify,
                            "simplify to normal form before trisecting");
  diagram_trisect->callback([&, trisect_in, trisect_simplify] {
    basediagram::BaseDiagram d = io::diagram_from_json(read_input(*trisect_in));
    if (*trisect_simplify) d = basediagram::simplify_to_sblf(d).result;
    const basediagram::TrisectionResult r = basediagram::sblf_to_trisection(d);
    emit_diagram_or(r.diagram, io::to_json(r, pretty()));
  });

  auto render_in = std::make_shared<std::string>();
  CLI::App* diagram_render = sub(diagram_app, "render", "picture of a base diagram");
  diagram_render->add_option("input", *render_in, "base diagram JSON file or -")->required();
  diagram_render->callback([&, render_in] {
    output = render::diagram_svg(io::diagram_from_json(read_input(*render_in)));
  });

  // ---- surgery ---------------------------------------------------------------
  CLI::App* surgery_app = sub(&app, "surgery", "standardization schedules");
  surgery_app->require_subcommand(1);

  auto pi1_in = std::make_shared<std::string>();
  auto chi_in = std::make_shared<int>(0);
  auto cobordism_in = std::make_shared<std::string>();
  CLI::App* surgery_std = sub(surgery_app, "standardize", "orientable standard form schedule");
  surgery_std->add_option("--pi1", *pi1_in, "fundamental group JSON file or -")->required();
  surgery_std->add_option("--chi", *chi_in, "Euler characteristic")->required();
  surgery_std->add_option("--cobordism", *cobordism_in, "unoriented cobordism class")
      ->required()
      ->check(CLI::IsMember({"rp4", "s2xrp2"}));
  surgery_std->callback([&, pi1_in, chi_in, cobordism_in] {
    no_svg();
    surgery::ManifoldData x;
    x.pi1 = io::presentation_from_json(read_input(*pi1_in));
    x.chi = *chi_in;
    x.cobordism = *cobordism_in == "rp4" ? surgery::CobordismClass::RP4Like
                                         : surgery::CobordismClass::S2xRP2Like;
    output = io::to_json(surgery::standardize(x), x.pi1, pretty()) + "\n";
  });

  // ---- corpus ----------------------------------------------------------------
  CLI::App* corpus_app = sub(&app, "corpus", "worked-example regression corpus");
  corpus_app->require_subcommand(1);

  auto corpus_names = std::make_shared<std::vector<std::string>>();
  auto corpus_all = std::make_shared<bool>(false);
  CLI::App* corpus_run = sub(corpus_app, "run", "replay worked examples");
  corpus_run->add_option("names", *corpus_names, "entries to run (default: all)");
  corpus_run->add_flag("--all", *corpus_all, "run every entry");
  corpus_run->callback([&, corpus_names, corpus_all] {
    no_svg();
    const std::vector<corpus::CorpusEntry> entries = load_corpus();
    std::vector<corpus::CorpusEntry> selected;
    if (corpus_names->empty() || *corpus_all) {
      selected = entries;
    } else {
      for (const std::string& name : *corpus_names) {
        const auto it = std::find_if(entries.begin(), entries.end(),
                                     [&](const corpus::CorpusEntry& e) { return e.name == name; });
        if (it == entries.end()) fail("UnknownName", "no corpus entry named '" + name + "'");
        selected.push_back(*it);
      }
    }
    if (selected.empty()) fail("UnknownName", "the corpus is empty");

    int passed = 0;
    for (const corpus::CorpusEntry& e : selected) {
      const corpus::CorpusOutcome o = corpus::run_entry(e);
      output += std::string("=== ") + o.name + ": " + (o.passed ? "PASS" : "FAIL") + "\n";
      for (const std::string& line : o.ledger) output += line + "\n";
      if (o.passed) {
        ++passed;
      } else {
        corpus_failed = true;
      }
    }
    if (selected.size() > 1) {
      output += "passed " + std::to_string(passed) + "/" +
                std::to_string(selected.size()) + " entries\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (out_path.empty()) {
    std::cout << output;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) fail("ParseError", "cannot open output file '" + out_path + "'");
    out << output;
  }
  return corpus_failed ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == "ParseError" ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
