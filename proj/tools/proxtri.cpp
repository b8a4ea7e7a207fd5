#include <CLI11.hpp>

#include <iostream>

#include "proxtri/error.hpp"
#include "proxtri/io/commands.hpp"

namespace io = proxtri::io;

int main(int argc, char** argv) {
  CLI::App app{"Delaunay/Voronoi construction, proximity queries and property checks"};
  app.require_subcommand(1);

  std::string frame_text;
  std::uint64_t seed = 0;
  std::string format = "document";
  bool quiet = false;
  app.add_option("--frame", frame_text, "clip frame x0,y0,x1,y1 for Voronoi cells");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"document", "json-like"}));
  app.add_flag("--quiet", quiet, "suppress diagnostics on stderr");

  std::optional<std::filesystem::path> out_path;
  auto add_out = [&](CLI::App* cmd) { cmd->add_option("-o,--out", out_path, "output file (default stdout)"); };

  std::size_t count = 0;
  std::string distribution = "uniform";
  auto* gen = app.add_subcommand("gen", "generate a site file");
  gen->add_option("n", count, "number of sites")->required();
  gen->add_option("-d,--distribution", distribution, "uniform | clustered | cocircular | collinear-heavy");
  add_out(gen);

  std::filesystem::path input;
  std::optional<std::filesystem::path> constraints;
  auto* tri = app.add_subcommand("triangulate", "Delaunay or constrained Delaunay triangulation");
  tri->add_option("input", input, "site file")->required();
  tri->add_option("-c,--constraints", constraints, "constraint file");
  add_out(tri);

  std::string suite = "all";
  auto* check = app.add_subcommand("check", "run property suites");
  check->add_option("input", input, "site file or result document")->required();
  check->add_option("-s,--suite", suite, "delaunay | dual | lemma2 | theorem-equivalence | regions | leader | all");
  add_out(check);

  std::string what = "overlay";
  auto* render = app.add_subcommand("render", "write an SVG figure");
  render->add_option("input", input, "site file or result document")->required();
  render->add_option("-w,--what", what, "delaunay | voronoi | overlay | regions");
  add_out(render);

  std::string relation, sel_a, sel_b;
  auto* query = app.add_subcommand("query", "evaluate near, far or strong between two elements");
  query->add_option("input", input, "site file or result document")->required();
  query->add_option("relation", relation, "near | far | strong")->required();
  query->add_option("a", sel_a, "t:<id> | e:<i>-<j> | v:<site>")->required();
  query->add_option("b", sel_b, "t:<id> | e:<i>-<j> | v:<site>")->required();
  add_out(query);

  for (auto* sub : {gen, tri, check, render, query}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    io::GlobalOptions g;
    g.seed = seed;
    g.quiet = quiet;
    g.format = format == "json-like" ? io::Format::JsonLike : io::Format::Document;
    if (!frame_text.empty()) g.frame = io::parse_frame(frame_text);
    const io::Output out{out_path, &std::cout};

    if (*gen) return io::run_gen(g, count, distribution, out);
    if (*tri) return io::run_triangulate(g, input, constraints, out);
    if (*check) return io::run_check(g, input, suite, out);
    if (*render) return io::run_render(g, input, what, out);
    return io::run_query(g, input, relation, sel_a, sel_b, out);
  } catch (const proxtri::Error& e) {
    if (!quiet) std::cerr << "proxtri: " << e.what() << "\n";
    return io::exit_code_for(e);
  } catch (const std::exception& e) {
    if (!quiet) std::cerr << "proxtri: " << e.what() << "\n";
    return 2;
  }
}
