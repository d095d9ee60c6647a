#ifndef PERMCLASS_IO_HPP
#define PERMCLASS_IO_HPP

#include <ostream>

#include <json.hpp>

#include "permclass/class_algebra.hpp"
#include "permclass/decompose.hpp"
#include "permclass/structure.hpp"
#include "permclass/verify.hpp"

namespace permclass {

using Json = nlohmann::ordered_json;

/// Permutations appear in spaced one-line notation ("e" when empty).
Json to_json(const Permutation &p);
Json to_json(const LayerShape &shape);
Json to_json(const BlockDecomposition &blocks);
Json to_json(const Factorization &f);
Json to_json(const Report &report, bool timings = false);
Json to_json(const MSearchReport &report);
Json to_json(const SuiteResult &result, bool timings = false);

/// "pass", "fail" or "skipped".
const char *suite_status_name(Status s);

/// Slice export: one JSON integer array per line.
void write_json_lines(std::ostream &out, const Slice &slice);
/// Slice export: one permutation per line in one-line notation.
void write_text_lines(std::ostream &out, const Slice &slice);

} // namespace permclass

#endif
