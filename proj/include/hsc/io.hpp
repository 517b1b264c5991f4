#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "hsc/equivariant.hpp"
#include "hsc/structures.hpp"
#include "hsc/ydmod.hpp"

namespace hsc {

// Textual structure-constants format "HSC v1".
//
//   hsc v1
//   begin <name>
//   kind: bialgebra
//   field: Q            # or F<p>
//   dim: 2
//   basis: [1, g]
//   comul: [(0, 0, 0, "1"), (1, 1, 1, "1")]
//   ...
//   end
//
// Map entries are sparse tuples: the output leg indices, then the input leg
// indices, then the coefficient as a quoted "a" or "a/b". Records refer to
// earlier records in the same document by name (over:, left:, right:).
// Comments run from '#' to end of line; whitespace is free. The serializer is
// canonical — fixed key order, tuples sorted — so serialize(parse(s)) is the
// canonical form of s and round trips byte-identically on its own output.

// Stored xi table at the (H, C) probe; semantic shape checks happen at use.
struct XiBlock {
    LinearMap matrix;
};

using RecordValue = std::variant<Coalgebra, Algebra, Bialgebra, HopfAlgebra, RightComodule,
                                 LeftComodule, LeftModule, ModuleCoalgebra, EquivariantBicomodule,
                                 YDModule, XiBlock>;

struct Record {
    std::string name;
    std::string kind;
    std::map<std::string, std::string> refs;  // over / left / right -> record name
    RecordValue value;
};

struct Document {
    std::vector<Record> records;

    const Record& find(const std::string& name) const;  // SemanticError when absent
    bool has(const std::string& name) const;
};

// Throws ParseError (with line/column) for malformed syntax and SemanticError
// (with the offending record.key path) for well-formed but meaningless input.
Document parse_document(const std::string& text);

std::string serialize(const Document& doc);

// Viewing helpers: extract the named facet of a parsed record, unwrapping
// richer kinds (a hopf record yields its bialgebra or coalgebra, and so on).
// Throw SemanticError when the record has no such facet.
Coalgebra coalgebra_of(const Record& r);
Bialgebra bialgebra_of(const Record& r);

// Run the axiom suite matching the record's kind (a stored xi table has no
// standalone axioms and reports a single trivially-passing entry).
CheckReport check_record(const Record& r);

}  // namespace hsc
