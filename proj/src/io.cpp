#include "permclass/io.hpp"

namespace permclass {

Json to_json(const Permutation &p) { return p.spaced(); }

Json to_json(const LayerShape &shape) { return shape.lengths; }

Json to_json(const BlockDecomposition &blocks) {
  Json list = Json::array();
  for (const auto &b : blocks.blocks)
    list.push_back({{"start", b.start},
                    {"len", b.length},
                    {"dir", b.direction == BlockDirection::Increasing ? "inc"
                                                                      : "dec"}});
  return {{"count", blocks.count()}, {"blocks", std::move(list)}};
}

Json to_json(const Factorization &f) {
  Json factors = Json::array();
  for (const auto &factor : f.factors)
    factors.push_back(
        {{"perm", to_json(factor.perm)}, {"class", factor.cls.render()}});
  return {{"target", to_json(f.target)}, {"factors", std::move(factors)}};
}

Json to_json(const Report &report, bool timings) {
  Json operands = Json::array();
  for (const auto &e : report.operands)
    operands.push_back(e.render());
  Json results = Json::array();
  for (const auto &v : report.results) {
    Json witness = Json::array();
    for (const auto &p : v.witness)
      witness.push_back(to_json(p));
    Json entry = {{"n", v.order},
                  {"status", status_name(v.status)},
                  {"witness", std::move(witness)},
                  {"note", v.note}};
    if (timings)
      entry["seconds"] = v.seconds;
    results.push_back(std::move(entry));
  }
  return {{"relation", report.relation},
          {"operands", std::move(operands)},
          {"status", status_name(report.status())},
          {"verified_up_to", report.verified_up_to()},
          {"results", std::move(results)}};
}

Json to_json(const MSearchReport &report) {
  Json entries = Json::array();
  for (const auto &e : report.entries)
    entries.push_back(
        {{"m", e.m},
         {"verified_up_to", e.verified_up_to},
         {"counterexample",
          e.counterexample ? to_json(*e.counterexample) : Json(nullptr)},
         {"skipped", e.skipped}});
  return {{"k", report.k},
          {"l", report.l},
          {"n_max", report.n_max},
          {"monotone", report.monotone},
          {"entries", std::move(entries)}};
}

const char *suite_status_name(Status s) {
  switch (s) {
  case Status::Holds:
    return "pass";
  case Status::Fails:
    return "fail";
  case Status::Skipped:
    return "skipped";
  }
  return "?";
}

Json to_json(const SuiteResult &result, bool timings) {
  Json records = Json::array();
  for (const auto &r : result.records)
    records.push_back({{"status", status_name(r.status)},
                       {"what", r.what},
                       {"witness", r.witness}});
  Json out = {{"name", result.name},
              {"parameters", result.parameters},
              {"status", suite_status_name(result.status())},
              {"counterexamples", result.counterexamples()},
              {"records", std::move(records)}};
  if (timings)
    out["seconds"] = result.seconds;
  return out;
}

void write_json_lines(std::ostream &out, const Slice &slice) {
  for (const auto &p : slice)
    out << Json(std::vector<int>(p.values().begin(), p.values().end())).dump()
        << '\n';
}

void write_text_lines(std::ostream &out, const Slice &slice) {
  for (const auto &p : slice)
    out << p.str() << '\n';
}

} // namespace permclass
