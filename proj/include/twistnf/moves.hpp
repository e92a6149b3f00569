// Collapsing the boundary of a triangulated disc to one triangle by
// elementary moves.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace twistnf {

struct DiscComplex {
  std::vector<std::array<int, 3>> triangles;
  int w() const { return static_cast<int>(triangles.size()); }
};

// nullopt iff d is a connected triangulated surface with one boundary cycle
// and Euler characteristic 1.
std::optional<std::string> disc_violation(const DiscComplex& d);
// Boundary cycle of a valid disc, starting at its smallest vertex.
std::vector<int> boundary_cycle(const DiscComplex& d);

struct ElementaryMove {
  enum Kind { InsertVertex, RemoveVertex, TriangleSlide, TriangleSlideInverse } kind;
  std::array<int, 3> triangle{};  // slides
  int a = -1, b = -1;             // segment for InsertVertex
  int vertex = -1;                // new vertex (insert) or removed vertex
  std::string str() const;
};

struct MoveCertificate {
  std::vector<int> initial;
  std::vector<ElementaryMove> moves;
  std::vector<int> final_cycle;
};

// Throws InputError naming the violated condition if d is not a disc.
std::vector<std::array<int, 3>> shelling_order(const DiscComplex& d);
MoveCertificate collapse_certificate(const DiscComplex& d);

struct Verdict {
  bool ok;
  std::string diagnostic;
};
Verdict validate_certificate(const MoveCertificate& c, const DiscComplex& d);

std::string serialize(const MoveCertificate& c);
MoveCertificate parse_certificate(const std::string& text);
std::string serialize(const DiscComplex& d);
DiscComplex parse_disc(const std::string& text);

}  // namespace twistnf
