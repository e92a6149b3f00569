#include "twistnf/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "twistnf/bounds.hpp"
#include "twistnf/disc_catalog.hpp"
#include "twistnf/hilbert.hpp"
#include "twistnf/matching.hpp"
#include "twistnf/moves.hpp"
#include "twistnf/surface_vectors.hpp"
#include "twistnf/triangulation.hpp"

namespace twistnf {

namespace {

constexpr const char* kFormats = R"(File formats (line-based, '#' starts a comment):
  triangulation:
    tets <t>                          required first
    glue <i> <f> <j> <g> <a> <b> <c>  face f of tet i onto face g of tet j; the
                                      vertices of f in ascending order go to a,b,c
    mark edge <i> <u> <v>             edge {u,v} of tet i lies on the link
    mark vertex <i> <u>               isolated marked vertex
    knot <i1> <u1> <v1> ...           optional explicit link cycle
  matching system:
    vars <n>, then optional 'var <tet> <encoding>' lines, 'eq <c1> ... <cn>'
    per equation and 'incompat <i> <j>' per incompatible pair
  disc:
    triangles <w>, then 'tri <a> <b> <c>' per triangle
  certificate:
    initial <cycle>, then 'slide a b c' | 'unslide a b c' | 'insert a b v' |
    'remove v' per move, then 'final <cycle>'
Exit status: 0 ok, 1 invalid input or failed check, 2 resource cap hit.)";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Plain aligned columns or CSV. The first column is left-aligned.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out, bool csv) const {
    if (csv) {
      for (const auto& r : rows_) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
        out << "\n";
      }
      return;
    }
    std::vector<std::size_t> w(rows_[0].size(), 0);
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        std::string cell = r[i];
        std::string pad(w[i] - cell.size(), ' ');
        if (i) line += "  ";
        line += i == 0 ? cell + pad : pad + cell;
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << "\n";
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string pass(bool ok) { return ok ? "PASS" : "FAIL"; }
std::string flag(bool b) { return b ? "1" : "0"; }

std::string join(const SurfaceVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

void two_edge_note(std::ostream& out) {
  int ours = static_cast<int>(enumerate_twisted_discs(TetType::TwoEdges).size());
  int sum = 0;
  for (const auto& b : two_edge_breakdown()) sum += b.reference;
  out << "note: two marked edges: reference sub-counts sum to " << sum
      << ", reference table states " << kReferenceTwisted[8] << ", enumerated " << ours
      << "\n";
  for (const auto& b : two_edge_breakdown()) {
    out << "note:   " << b.name << ": " << b.count << " (reference " << b.reference << ")";
    if (b.count != b.reference) out << " differs";
    if (!b.detail.empty()) out << "; " << b.detail;
    out << "\n";
  }
}

int cmd_tables(std::ostream& out, bool csv) {
  Table t1({"type", "ours", "ref", "status"});
  bool all = true;
  for (std::size_t i = 0; i < kAllTypes.size(); ++i) {
    TetType t = kAllTypes[i];
    int ours = static_cast<int>(enumerate_twisted_discs(t).size());
    int ref = kReferenceTwisted[i];
    bool ok = t == TetType::TwoEdges ? (ours == 148 || ours == 149) : ours == ref;
    all &= ok;
    t1.add({type_label(t), std::to_string(ours), std::to_string(ref), pass(ok)});
  }
  Table t2({"type", "ours", "ref", "max_arc", "ref", "edge_arcs", "status"});
  for (std::size_t i = 0; i < kAllTypes.size(); ++i) {
    TetType t = kAllTypes[i];
    int ours = static_cast<int>(truncate_disc_types(t).size());
    int arc = max_common_arc_count(t);
    bool ok = ours == kReferenceNormal[i] && arc == kReferenceMaxArc[i];
    all &= ok;
    t2.add({truncated_label(t), std::to_string(ours), std::to_string(kReferenceNormal[i]),
            std::to_string(arc), std::to_string(kReferenceMaxArc[i]),
            std::to_string(max_edge_arc_count(t)), pass(ok)});
  }
  if (!csv) out << "Twisted normal disc types\n";
  t1.print(out, csv);
  if (!csv) {
    two_edge_note(out);
    out << "\nNormal disc types in truncated tetrahedra\n";
  }
  t2.print(out, csv);
  return all ? 0 : 1;
}

int cmd_enumerate(std::ostream& out, std::ostream& err, const std::string& type_arg,
                  const std::string& family, bool csv) {
  auto t = parse_type_name(type_arg);
  if (!t) throw InputError("unknown type: " + type_arg);
  const auto& cat = catalog_for(*t);
  std::vector<int> rows;
  if (family.empty()) {
    for (int i = 0; i < static_cast<int>(cat.twisted.size()); ++i) rows.push_back(i);
  } else {
    rows = family_members(*t, family);
  }
  Table tab({"index", "encoding", "family", "sides", "truncated"});
  for (int i : rows) {
    const auto& d = cat.twisted[i];
    tab.add({std::to_string(i), d.encoding, d.family, std::to_string(d.sides),
             std::to_string(d.normal_image)});
  }
  tab.print(out, csv);
  if (*t == TetType::TwoEdges && family.empty()) two_edge_note(err);
  return 0;
}

int cmd_matching(std::ostream& out, const std::string& path) {
  auto tri = load_triangulation(path);
  out << serialize_system(build_matching_system(tri));
  return 0;
}

int cmd_hilbert(std::ostream& out, const std::string& path, const std::string& tri_path,
                std::size_t cap, bool serial) {
  MarkedTriangulation tri;
  if (!tri_path.empty()) tri = load_triangulation(tri_path);
  auto sys = load_system(path, tri_path.empty() ? nullptr : &tri);
  HilbertOptions opt;
  opt.max_candidates = cap;
  opt.exec = serial ? Exec::Serial : Exec::Parallel;
  for (const auto& v : hilbert_basis(sys, opt)) out << join(v) << "\n";
  return 0;
}

int cmd_search(std::ostream& out, std::ostream& err, const std::string& path,
               const std::string& emit, std::size_t cap) {
  auto tri = load_triangulation(path);
  HilbertOptions opt;
  opt.max_candidates = cap;
  auto res = search_spanning_disc(tri, opt);
  const auto& sys = res.system;
  out << "vars " << sys.size() << "\n";
  out << "basis " << res.basis.size() << "\n";
  out << "coordinate_bound " << symbolic(res.coordinate_bound) << "\n";
  out << "candidates " << res.candidates.size() << "\n";
  for (std::size_t k = 0; k < res.candidates.size(); ++k) {
    const auto& c = res.candidates[k];
    out << "candidate " << k << " weight " << c.weight << " euler " << c.euler
        << " compatible " << flag(c.compatible) << " boundary_restricted "
        << flag(c.boundary_restricted) << " spans " << flag(c.spans) << " fundamental "
        << flag(c.fundamental) << " within_bound " << flag(c.within_bound) << "\n";
    for (int i = 0; i < sys.size(); ++i)
      if (c.vector[i] != 0)
        out << "  " << i << " tet " << sys.vars[i].tet << " " << sys.disc(i).encoding << " "
            << c.vector[i] << "\n";
  }
  if (!res.diagnostic.empty()) err << res.diagnostic << "\n";
  if (!emit.empty()) {
    if (res.candidates.empty()) throw InputError("no candidate to emit");
    std::ofstream f(emit);
    if (!f) throw InputError("cannot write " + emit);
    f << join(res.candidates.front().vector) << "\n";
  }
  return 0;
}

int cmd_collapse(std::ostream& out, std::ostream& err, const std::string& path,
                 const std::string& cert_path) {
  auto disc = parse_disc(read_file(path));
  if (cert_path.empty()) {
    out << serialize(collapse_certificate(disc));
    return 0;
  }
  auto v = validate_certificate(parse_certificate(read_file(cert_path)), disc);
  if (v.ok) {
    out << "valid\n";
    return 0;
  }
  err << "invalid certificate: " << v.diagnostic << "\n";
  return 1;
}

int cmd_bounds(std::ostream& out, std::int64_t tets, std::int64_t crossings, bool sym,
               std::int64_t bit_cap) {
  auto show = [&](const BigInt& v) { return sym ? symbolic(v) : v.str(); };
  bool ok = true;
  if (tets > 0) {
    auto d = disc_count_bound(tets);
    out << "disc_count_raw " << show(d.raw) << "\n";
    out << "disc_count_relaxed " << show(d.relaxed) << "\n";
    out << "disc_count_total " << show(d.total) << "\n";
    out << "raw_le_relaxed " << flag(d.raw_le_relaxed) << "\n";
    out << "squared_le_total " << flag(d.squared_le_total) << "\n";
    out << "elementary_moves " << show(elementary_move_bound(tets)) << "\n";
    ok = d.raw_le_relaxed && d.squared_le_total;
  }
  if (crossings > 0) {
    auto r = reidemeister_bound(crossings, bit_cap);
    out << "tetrahedra " << r.t << "\n";
    out << "q_exponent " << r.q_exponent << "\n";
    out << "final_exponent " << r.final_exponent << "\n";
    out << "expanded " << flag(r.expanded) << "\n";
    out << "q_below " << flag(r.q_below) << "\n";
    out << "chain_closes " << flag(r.chain_closes) << "\n";
    out << "status " << r.status_text() << "\n";
    ok = r.q_below && (r.chain_closes || r.status == ReidemeisterBound::OneCrossingException);
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted normal surface toolkit for marked triangulations", "twistnf"};
  app.footer(kFormats);
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv"}));
  };
  std::size_t cap = HilbertOptions{}.max_candidates;

  auto* tables = app.add_subcommand("tables", "Print both disc-type tables against reference values");
  add_format(tables);

  std::string type_arg, family;
  auto* enumerate = app.add_subcommand("enumerate", "List twisted disc types of one tetrahedron type");
  enumerate->add_option("--type", type_arg, "Tetrahedron type, e.g. two-edges")->required();
  enumerate->add_option("--family", family, "Family filter, optionally with ':new'");
  add_format(enumerate);

  std::string path;
  auto* matching = app.add_subcommand("matching", "Emit the matching system of a triangulation");
  matching->add_option("triangulation", path)->required();

  bool serial = false;
  auto* hilbert = app.add_subcommand("hilbert", "Minimal Hilbert basis of a system file");
  hilbert->add_option("system", path)->required();
  hilbert->add_option("--max-candidates", cap, "Cap on candidates per level and basis size");
  hilbert->add_flag("--serial", serial, "Disable parallel expansion");
  std::string tri_path;
  hilbert->add_option("--triangulation", tri_path, "Resolve 'var' lines against this file");

  std::string emit;
  auto* search = app.add_subcommand("search", "Search a fundamental spanning disc");
  search->add_option("triangulation", path)->required();
  search->add_option("--emit-vector", emit, "Write the winning vector to this file");
  search->add_option("--max-candidates", cap, "Hilbert basis cap");

  std::string cert;
  auto* collapse = app.add_subcommand("collapse", "Collapse certificate for a triangulated disc");
  collapse->add_option("disc", path)->required();
  collapse->add_option("--validate", cert, "Replay this certificate instead of emitting one");

  std::int64_t tets = 0, crossings = 0, bit_cap = 1'000'000;
  bool sym = false;
  auto* bounds = app.add_subcommand("bounds", "Evaluate the disc, move and Reidemeister bounds");
  bounds->add_option("--tetrahedra", tets, "Tetrahedron count t")
      ->check(CLI::PositiveNumber);
  bounds->add_option("--crossings", crossings, "Crossing number n")
      ->check(CLI::PositiveNumber);
  bounds->add_flag("--symbolic", sym, "Print powers of two as 2^e");
  bounds->add_option("--bit-cap", bit_cap, "Largest exponent expanded in full");
  bounds->require_option(1, 2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const bool csv = format == "csv";
  try {
    if (*tables) return cmd_tables(out, csv);
    if (*enumerate) return cmd_enumerate(out, err, type_arg, family, csv);
    if (*matching) return cmd_matching(out, path);
    if (*hilbert) return cmd_hilbert(out, path, tri_path, cap, serial);
    if (*search) return cmd_search(out, err, path, emit, cap);
    if (*collapse) return cmd_collapse(out, err, path, cert);
    if (*bounds) return cmd_bounds(out, tets, crossings, sym, bit_cap);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace twistnf
