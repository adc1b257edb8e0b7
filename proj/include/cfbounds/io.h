// Copyright 2026 The cfbounds Authors.
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

// JSON data files and the built-in datasets.
//
// Probabilities are always JSON strings holding exact decimals ("0.32") or
// fractions ("1/14"); binary floats are rejected so no rounding enters the
// exact pipeline.
//
// Instrumental-variable dataset:
//   { "name": "peptaid", "model": "iv-binary", "p_z1": "0.1",
//     "p": { "00.0": "0.32", ..., "11.1": "0.14" } }   keys are yd.z
//
// General dataset:
//   { "name": "party",
//     "model": { "variables": [ { "name": "A", "domain": ["a0", "a1"],
//                                 "parents": [] }, ... ],
//                "clusters": [ ["A"], ["B"] ] },
//     "conditionals": [
//       { "variables": ["B"], "given": { "A": "a0" },
//         "p": { "b0": "0.9", "b1": "0.1" } }, ... ] }
//   Keys of "p" are value labels of the cluster's variables joined by ","
//   in cluster order; "given" assigns the cluster's reduced parents; missing
//   keys are zero.
//
// Response prior (for exact evaluation):
//   { "priors": [ { "variables": ["B"], "p": { "0": "0.1", "1": "0.8" } } ] }
//   Keys are response indices joined by ",".
//
// Subjective constraints:
//   { "constraints": [ { "terms": [ { "r": { "B": 2 }, "coef": "1" } ],
//                        "sense": "=", "rhs": "0", "label": "..." } ] }
//
// Response distribution of the IV model:
//   { "q": { "00": "0.1", ..., "33": "0" } }   keys are jk, missing are zero.

#ifndef CFBOUNDS_IO_H_
#define CFBOUNDS_IO_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cfbounds/bounds.h"
#include "cfbounds/constraints.h"
#include "cfbounds/rational.h"
#include "cfbounds/rfm.h"

namespace cfbounds {

using Json = nlohmann::ordered_json;

struct Dataset {
  std::string name;
  CausalModel model;
  ObservedConditionals observed;
  std::optional<IvDistribution> iv;
};

Rational ParseProbabilityValue(const Json& value, const std::string& where);

CausalModel ParseModel(const Json& model);
Dataset ParseDataset(const Json& doc);
Json DatasetToJson(const Dataset& dataset);
Json IvDatasetJson(const std::string& name, const IvDistribution& dist);

ResponsePrior ParsePrior(const Json& doc, const CausalModel& model);
std::vector<SubjectiveConstraint> ParseSubjective(const Json& doc, const CausalModel& model);
std::vector<Rational> ParseQ(const Json& doc);
Json QToJson(const std::vector<Rational>& q);

std::vector<std::string> BuiltinDatasetNames();
// nullopt when `name` is not built in.
std::optional<Json> BuiltinDatasetJson(const std::string& name);

Json ReadJsonFile(const std::string& path);
// Built-in name, or else a path to a JSON dataset file.
Dataset LoadDataset(const std::string& name_or_path);

}  // namespace cfbounds

#endif  // CFBOUNDS_IO_H_
