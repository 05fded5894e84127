// SPDX-License-Identifier: Apache-2.0

#include "ctw/serialize.hpp"

#include <cmath>
#include <unordered_map>

namespace ctw {

Json to_json(const Finding& f) {
  return Json{{"case", f.case_index},
              {"inputs", f.inputs},
              {"claim", f.claim},
              {"observed", f.observed},
              {"error_bound", f.error_bound}};
}

Json to_json(const Report& r) {
  Json findings = Json::array();
  for (const auto& f : r.findings) findings.push_back(to_json(f));
  return Json{{"suite", r.suite},
              {"seed", r.seed},
              {"scale", r.scale},
              {"cases", r.cases},
              {"passes", r.passes},
              {"findings", std::move(findings)},
              {"error_bound_total", r.error_bound_total},
              {"millis", r.millis}};
}

Report report_from_json(const Json& j) {
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.scale = j.value("scale", std::string{});
  r.cases = j.at("cases").get<std::size_t>();
  r.passes = j.at("passes").get<std::size_t>();
  for (const auto& f : j.at("findings")) {
    r.findings.push_back(Finding{f.at("case").get<std::size_t>(), f.at("inputs").get<std::string>(),
                                 f.at("claim").get<std::string>(), f.at("observed").get<std::string>(),
                                 f.at("error_bound").get<double>()});
  }
  r.error_bound_total = j.at("error_bound_total").get<double>();
  r.millis = j.at("millis").get<std::int64_t>();
  return r;
}

Json to_json(const SuiteDescriptor& d) {
  return Json{{"name", d.name}, {"claim", d.claim}, {"anchor", d.anchor}};
}

Json to_json(const EqualityVerdict& v) {
  Json j{{"verdict", to_string(v.kind)},
         {"method", to_string(v.method)},
         {"primes", v.primes}};
  if (v.definitely_unequal()) {
    if (v.witness_prime != 0) j["witness_prime"] = v.witness_prime;
  } else {
    j["error_bound"] = v.error_bound;
    j["log10_error_bound"] = std::isfinite(v.log10_error_bound) ? Json(v.log10_error_bound) : Json(nullptr);
  }
  return j;
}

Json to_json(const DagStats& s) {
  return Json{{"nodes", s.nodes}, {"literal_letters", s.literal_letters}, {"depth", s.depth}};
}

namespace {

const char* kind_name(detail::Kind k) {
  switch (k) {
    case detail::Kind::Literal: return "literal";
    case detail::Kind::Concat: return "concat";
    case detail::Kind::Slice: return "slice";
    case detail::Kind::Power: return "power";
  }
  return "?";
}

class Dumper {
 public:
  Json nodes = Json::array();

  std::size_t visit(const detail::Node* n) {
    if (auto it = index_.find(n); it != index_.end()) return it->second;
    Json j{{"kind", kind_name(n->kind)}, {"length", to_string(n->length)}};
    switch (n->kind) {
      case detail::Kind::Literal:
        j["word"] = format_word(n->word);
        break;
      case detail::Kind::Concat:
        j["first"] = ref(n->first);
        j["second"] = ref(n->second);
        j["cancelled"] = to_string(n->offset);
        break;
      case detail::Kind::Slice:
        j["source"] = ref(n->first);
        j["offset"] = to_string(n->offset);
        break;
      case detail::Kind::Power:
        j["base"] = ref(n->first);
        j["exponent"] = n->exponent;
        break;
    }
    const std::size_t id = nodes.size();
    nodes.push_back(std::move(j));
    index_.emplace(n, id);
    return id;
  }

  Json ref(const Expr& e) {
    if (e.empty()) return nullptr;
    return Json{{"node", visit(e.node())}, {"inverted", e.inverted()}};
  }

 private:
  std::unordered_map<const detail::Node*, std::size_t> index_;
};

}  // namespace

Json dump_expr(const Expr& e) {
  Dumper d;
  Json root = d.ref(e);
  return Json{{"length", to_string(e.length())}, {"root", std::move(root)}, {"nodes", std::move(d.nodes)}};
}

}  // namespace ctw
