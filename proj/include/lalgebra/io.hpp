#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lalgebra/decomposition.hpp"
#include "lalgebra/inductive.hpp"
#include "lalgebra/lallement.hpp"
#include "lalgebra/plonka.hpp"

namespace lalgebra {

/// Raw homomorphism data, deliberately unvalidated so `check hom` can load
/// a candidate map and report false instead of refusing to parse.
struct HomDocument {
  FiniteAlgebra source, target;
  std::vector<int> map;

  friend bool operator==(const HomDocument&, const HomDocument&) = default;
};

/// A base map plus a total map into a sum carrier, as plain data.
struct TargetedMorphismDocument {
  std::vector<int> base_map;
  std::vector<int> total_map;

  friend bool operator==(const TargetedMorphismDocument&, const TargetedMorphismDocument&) = default;
};

/// A computed sum, serializable: the algebra, its block offsets, the
/// projection map and the base algebra; partition-function table present
/// for sums of inductive systems.
struct SumDocument {
  FiniteAlgebra algebra;
  std::vector<int> offsets;
  std::vector<int> projection;
  FiniteAlgebra base;
  std::optional<std::vector<int>> d_table;

  friend bool operator==(const SumDocument&, const SumDocument&) = default;
};

using DocumentBody =
    std::variant<Signature, FiniteAlgebra, Semilattice, Covering, LallementSystem,
                 InductiveSystem, LabeledMorphism, HomDocument, PlonkaAlgebra,
                 SumDocument, TargetedMorphismDocument>;

/// One parsed document.  `kind` is the schema discriminator ("signature",
/// "algebra", "semilattice", "covering", "lallement_system",
/// "inductive_system", "labeled_morphism", "homomorphism", "plonka_algebra",
/// "sum_result", "covering_morphism"); `name` may be empty.
/// `element_names` holds optional display labels, carried through untouched
/// and ignored by every computation.
struct Document {
  std::string kind;
  std::string name;
  DocumentBody body;
  std::vector<std::string> element_names;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Parse a file's text: either a single document object or a bundle
/// {"documents": [...]}.  Inside a bundle, any position expecting a nested
/// document also accepts the name of an earlier document of the right kind.
/// Structural problems raise FormatError with line/column context; value
/// errors (bad algebra shapes) raise UsageError.
std::vector<Document> parse_documents(const std::string& text);

/// Exactly-one convenience: the single document of the given kind in the
/// bundle (FormatError when absent or ambiguous).
Document single_document(const std::vector<Document>& docs, const std::string& kind);

/// Normalized serialization: fixed field order, all references inlined,
/// 2-space indent, trailing newline.  parse . serialize is the identity and
/// serialize . parse is one on normalized single-document text.
std::string serialize(const Document& doc);

std::vector<Document> load_documents(const std::string& path);

Document algebra_document(const FiniteAlgebra& a, const std::string& name);
Document system_document(const LallementSystem& s, const std::string& name);
Document sum_document(const SumDocument& s, const std::string& name);

}  // namespace lalgebra
