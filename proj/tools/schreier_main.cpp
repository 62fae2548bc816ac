// Command-line surface: realize | verify | aut | convert | census | oracle |
// emit-dot. Exit codes: 0 ok, 1 verification says no, 2 invalid input,
// 3 internal theorem-guard tripped.

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "schreier/census.hpp"
#include "schreier/factors.hpp"
#include "schreier/json_io.hpp"
#include "schreier/oracle.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using namespace schreier;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write file: " + path);
  out << data;
}

void header_line(const std::string& what, const std::string& digest) {
  std::cout << "# input " << what << " fnv1a=" << digest << "\n";
}

void print_header() { std::cout << "# schreier " << kVersion << "\n"; }

FiniteGroup load_group(const std::string& spec) {
  if (spec.rfind("preset:", 0) == 0) {
    header_line("group:" + spec, fnv1a_hex(spec));
    return FiniteGroup::preset(spec.substr(7));
  }
  std::string data = read_file(spec);
  header_line("group-file:" + spec, fnv1a_hex(data));
  return group_from_json(Json::parse(data, nullptr, true, true));
}

LabelledDigraph load_graph(const std::string& path) {
  std::string data = read_file(path);
  header_line("graph-file:" + path, fnv1a_hex(data));
  try {
    return graph_from_json(Json::parse(data));
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed json: ") + e.what());
  }
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

int cmd_realize(const std::string& group_spec, const std::string& product,
                const std::string& out_path, int census_n, int sigma_id,
                bool fast) {
  print_header();
  FiniteGroup group = load_group(group_spec);
  FreeProductSignature sig = FreeProductSignature::parse(product);
  header_line("product:" + sig.to_string(), fnv1a_hex(sig.to_string()));

  Realization real = [&] {
    if (census_n < 0) return realize(group, sig, fast);
    auto base = build_census_base(sig, static_cast<Vertex>(census_n));
    auto classes = canonical_orderings(base, legal_orderings(base));
    if (sigma_id < 0 ||
        static_cast<std::size_t>(sigma_id) >= classes.representatives.size())
      throw DomainError("sigma id out of range; census has " +
                        std::to_string(classes.representatives.size()) +
                        " classes");
    return splice_and_realize(group, sig, static_cast<Vertex>(census_n),
                              classes.representatives[sigma_id], fast);
  }();

  Json payload = realization_to_json(real);
  std::cout << "# output digest(no timings)=" << digest_without_timings(payload)
            << "\n";
  if (!out_path.empty()) write_file(out_path, json_text(payload));
  std::cout << "certified: group=" << describe_group(real.group)
            << " product=" << real.signature.to_string()
            << " index=" << real.schreier.vertex_count()
            << " aut_order=" << real.aut.order() << "\n";
  return real.certificate.all_passed() ? 0 : 3;
}

int cmd_verify(const std::string& path) {
  print_header();
  LabelledDigraph g = load_graph(path);
  ValidityReport rep = validate(g);
  std::cout << "regular: " << (rep.is_regular ? "yes" : "no") << "\n"
            << "connected: " << (rep.is_connected ? "yes" : "no") << "\n"
            << "schreier: " << (rep.is_schreier ? "yes" : "no") << "\n"
            << "free: " << (rep.is_free ? "yes" : "no") << "\n";
  if (rep.index) std::cout << "index: " << *rep.index << "\n";
  for (const auto& d : rep.degenerate_cycles)
    std::cout << "degenerate cycle: label="
              << g.signature().label_name(d.label) << " length=" << d.length
              << " at=" << d.representative << "\n";
  return rep.is_schreier && rep.is_free ? 0 : 1;
}

int cmd_aut(const std::string& path) {
  print_header();
  LabelledDigraph g = load_graph(path);
  if (!is_connected(g)) throw DomainError("graph is not connected");
  PermutationGroup aut = automorphisms(g);
  std::cout << "order: " << aut.order() << "\n";
  FiniteGroup fg = to_finite_group(aut);
  std::cout << "type: " << describe_group(fg) << "\n";
  std::vector<Perm> sorted = aut.elements;
  std::sort(sorted.begin(), sorted.end());
  for (unsigned gi : small_generating_set(fg)) {
    std::cout << "generator:";
    for (Vertex x : sorted[gi]) std::cout << " " << x;
    std::cout << "\n";
  }
  return 0;
}

int cmd_convert(const std::string& kind, const std::string& path,
                const std::string& out_path) {
  print_header();
  LabelledDigraph g = load_graph(path);
  Json payload;
  if (kind == "hypermap" || kind == "map") {
    Hypermap h = to_hypermap(g);
    if (kind == "map" && !h.is_map)
      throw DomainError("graph does not define a map (L is not a fixed-point-"
                        "free involution)");
    payload = object_to_json(h);
  } else if (kind == "paving") {
    payload = object_to_json(to_paving(g));
  } else if (kind == "constellation") {
    payload = object_to_json(to_constellation(g));
  } else {
    throw DomainError("unknown object kind: " + kind);
  }
  std::cout << "# output digest(no timings)=" << digest_without_timings(payload)
            << "\n";
  if (!out_path.empty())
    write_file(out_path, json_text(payload));
  else
    std::cout << json_text(payload);
  return 0;
}

int cmd_census(const std::string& product, int N, bool count_only,
               const std::string& out_dir, unsigned jobs) {
  print_header();
  FreeProductSignature sig = FreeProductSignature::parse(product);
  header_line("census:" + sig.to_string() + ":N=" + std::to_string(N),
              fnv1a_hex(sig.to_string() + "|" + std::to_string(N)));
  if (N <= 0) throw DomainError("census needs N > 0");
  CensusBase base = build_census_base(sig, static_cast<Vertex>(N));
  auto orderings = legal_orderings(base);
  auto classes = canonical_orderings(base, orderings);

  std::string bound = "n/a";
  try {
    bound = lower_bound(base.D, base.block).to_string();
  } catch (const DomainError&) {
  }
  std::cout << "free=" << base.F << " D=" << base.D
            << " prefix_len=" << base.prefix_len
            << " orderings=" << orderings.size()
            << " classes=" << classes.representatives.size()
            << " lower_bound=" << bound << "\n";
  if (count_only) return 0;
  if (out_dir.empty()) throw DomainError("census needs --out DIR");
  std::filesystem::create_directories(out_dir);

  struct Row {
    std::size_t id;
    Vertex index;
    std::size_t aut_order;
    std::size_t class_size;
    Json graph;
  };
  auto make_row = [&](std::size_t id) {
    LabelledDigraph h = extend(base, classes.representatives[id]);
    LabelledDigraph hs = split_census(base, h);
    return Row{id, h.vertex_count(), automorphisms(h).order(),
               classes.class_sizes[id], graph_to_json(hs)};
  };
  std::vector<Row> rows(classes.representatives.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = make_row(i);
  } else {
    std::vector<std::future<Row>> futs;
    for (std::size_t i = 0; i < rows.size(); ++i)
      futs.push_back(std::async(std::launch::async, make_row, i));
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = futs[i].get();
  }

  std::ostringstream csv;
  csv << "sigma_id,index,aut_order,iso_class_size\n";
  Json manifest;
  manifest["product"] = sig.to_string();
  manifest["N"] = N;
  manifest["D"] = base.D;
  manifest["classes"] = classes.representatives.size();
  manifest["lower_bound"] = bound;
  manifest["graphs"] = Json::array();
  for (const Row& row : rows) {
    csv << row.id << "," << row.index << "," << row.aut_order << ","
        << row.class_size << "\n";
    std::string file = "H_" + std::to_string(row.id) + ".json";
    write_file(out_dir + "/" + file, json_text(row.graph));
    Json entry;
    entry["sigma_id"] = row.id;
    entry["file"] = file;
    manifest["graphs"].push_back(std::move(entry));
  }
  write_file(out_dir + "/census.csv", csv.str());
  write_file(out_dir + "/manifest.json", json_text(manifest));
  std::cout << "wrote " << rows.size() << " graphs to " << out_dir << "\n";
  return 0;
}

int cmd_oracle(const std::string& product, int index,
               const std::string& out_path, unsigned jobs,
               const std::string& cache_dir) {
  print_header();
  FreeProductSignature sig = FreeProductSignature::parse(product);
  header_line("oracle:" + sig.to_string() + ":d=" + std::to_string(index),
              fnv1a_hex(sig.to_string() + "|" + std::to_string(index)));
  if (index <= 0) throw DomainError("oracle needs --index > 0");
  if (!cache_dir.empty()) std::filesystem::create_directories(cache_dir);
  auto enumd = enumerate_subgroups(sig, static_cast<Vertex>(index), 10, jobs,
                                   cache_dir);
  std::size_t free_count = 0;
  for (const auto& c : enumd.classes) free_count += c.is_free ? 1 : 0;
  auto hist = quotient_histogram(sig, static_cast<Vertex>(index), 10, jobs,
                                 cache_dir);

  const bool as_json =
      out_path.size() > 5 &&
      out_path.compare(out_path.size() - 5, 5, ".json") == 0;
  if (as_json) {
    Json j;
    j["product"] = sig.to_string();
    j["d"] = index;
    j["unbased_classes"] = enumd.classes.size();
    j["based_classes"] = enumd.based_class_count;
    j["free_classes"] = free_count;
    j["histogram"] = Json::object();
    for (const auto& [name, count] : hist) j["histogram"][name] = count;
    write_file(out_path, json_text(j));
    return 0;
  }
  std::ostringstream out;
  out << "# product=" << sig.to_string() << " d=" << index
      << " unbased_classes=" << enumd.classes.size()
      << " based_classes=" << enumd.based_class_count
      << " free_classes=" << free_count << "\n";
  out << "aut_type,count\n";
  for (const auto& [name, count] : hist)
    out << name << "," << count << "\n";
  if (!out_path.empty())
    write_file(out_path, out.str());
  else
    std::cout << out.str();
  return 0;
}

int cmd_emit_dot(const std::string& path, const std::string& out_path) {
  print_header();
  LabelledDigraph g = load_graph(path);
  std::string dot = to_dot(g);
  if (!out_path.empty())
    write_file(out_path, dot);
  else
    std::cout << dot;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite symmetry groups of Schreier graphs, maps and pavings"};
  app.require_subcommand(1);

  std::string group_spec, product, out_path, in_path, kind;
  int census_n = -1, sigma_id = -1, index = -1, big_n = -1;
  bool fast = false, count_only = false;
  unsigned jobs = 1;

  auto* realize_cmd = app.add_subcommand("realize",
                                         "realize a finite group as the "
                                         "automorphism group of a free "
                                         "Schreier graph");
  realize_cmd->add_option("--group", group_spec, "preset:<name> or a JSON file")
      ->required();
  realize_cmd->add_option("--product", product, "factor orders, e.g. 3,2 or inf,2")
      ->required();
  realize_cmd->add_option("--out", out_path, "output realization JSON");
  realize_cmd->add_option("--census-N", census_n, "splice a census graph of this size");
  realize_cmd->add_option("--sigma", sigma_id, "census class id to splice");
  realize_cmd->add_flag("--fast", fast, "skip the S.2 embedding check");

  auto* verify_cmd = app.add_subcommand("verify", "validate a graph file");
  verify_cmd->add_option("file", in_path, "graph JSON")->required();

  auto* aut_cmd = app.add_subcommand("aut", "print the automorphism group");
  aut_cmd->add_option("file", in_path, "graph JSON")->required();

  auto* convert_cmd =
      app.add_subcommand("convert", "convert a graph to a combinatorial object");
  convert_cmd->add_option("--to", kind, "hypermap | map | paving | constellation")
      ->required();
  convert_cmd->add_option("file", in_path, "graph JSON")->required();
  convert_cmd->add_option("--out", out_path, "output object JSON");

  auto* census_cmd =
      app.add_subcommand("census", "enumerate census graphs of a given size");
  census_cmd->add_option("--product", product, "base signature, e.g. 3,2")
      ->required();
  census_cmd->add_option("--N", big_n, "census graph size")->required();
  census_cmd->add_flag("--count-only", count_only, "print counts only");
  census_cmd->add_option("--out", out_path, "output directory");
  census_cmd->add_option("--jobs", jobs, "worker threads");

  std::string cache_dir;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "exhaustive low-index subgroup enumeration");
  oracle_cmd->add_option("--product", product, "signature")->required();
  oracle_cmd->add_option("--index", index, "subgroup index")->required();
  oracle_cmd->add_option("--out", out_path, "output CSV (.json for JSON)");
  oracle_cmd->add_option("--jobs", jobs, "worker threads");
  oracle_cmd->add_option("--cache", cache_dir, "canonical-form cache directory");

  auto* dot_cmd = app.add_subcommand("emit-dot", "export a graph as DOT");
  dot_cmd->add_option("file", in_path, "graph JSON")->required();
  dot_cmd->add_option("--out", out_path, "output DOT file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (realize_cmd->parsed())
      return cmd_realize(group_spec, product, out_path, census_n, sigma_id,
                         fast);
    if (verify_cmd->parsed()) return cmd_verify(in_path);
    if (aut_cmd->parsed()) return cmd_aut(in_path);
    if (convert_cmd->parsed()) return cmd_convert(kind, in_path, out_path);
    if (census_cmd->parsed())
      return cmd_census(product, big_n, count_only, out_path, jobs);
    if (oracle_cmd->parsed())
      return cmd_oracle(product, index, out_path, jobs, cache_dir);
    if (dot_cmd->parsed()) return cmd_emit_dot(in_path, out_path);
  } catch (const GuardError& e) {
    std::cerr << "internal guard tripped: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
