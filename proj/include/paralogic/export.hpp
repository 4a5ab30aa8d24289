// Copyright 2026 The Paralogic Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// JSON and Graphviz DOT renderings of tableaux, argumentation frameworks,
// extension listings and verdicts.

#ifndef PARALOGIC_EXPORT_HPP_
#define PARALOGIC_EXPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "paralogic/entailment.hpp"

namespace paralogic {

nlohmann::ordered_json tableau_json(const Tableau& t);
std::string tableau_dot(const Tableau& t);

/// Nodes labelled "A0: ({~C(a:C)}, T a:D)", one edge per attack.
std::string af_dot(const ArgumentationFramework& af);
/// {"arguments": [...], "attacks": [[attacker, target], ...]}.
nlohmann::ordered_json af_json(const ArgumentationFramework& af);

/// Arrays of argument indices.
nlohmann::ordered_json extensions_json(const std::vector<ArgumentSet>& extensions);

/// {query, mode, verdict, tableau, af?, stable_extensions?,
///  witnesses? | counterexample_extension?}.
nlohmann::ordered_json verdict_json(const Verdict& v);

struct Report {
  std::string text;
  nlohmann::ordered_json json;
};

Report explain(const Verdict& v);
Report explain(const KnowledgeBase& kb, const Proposition& query,
               SubsumptionMode mode, const ReasonerLimits& limits = {});

}  // namespace paralogic

#endif  // PARALOGIC_EXPORT_HPP_
