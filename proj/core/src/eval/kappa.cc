// Copyright 2026 The SoberLens Authors.
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

#include "soberlens/eval/kappa.h"

#include <istream>
#include <map>
#include <nlohmann/json.hpp>
#include <ostream>
#include <set>

#include "soberlens/common/error.h"
#include "soberlens/common/format.h"

namespace soberlens::eval {

double CohenKappa(std::span<const Label> a, std::span<const Label> b) {
  if (a.size() != b.size()) {
    throw DataError("kappa inputs differ in length");
  }
  if (a.empty()) throw DataError("kappa needs at least one item");
  const double n = static_cast<double>(a.size());
  double agree = 0.0, a_drunk = 0.0, b_drunk = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    agree += a[i] == b[i];
    a_drunk += a[i] == Label::kDrunk;
    b_drunk += b[i] == Label::kDrunk;
  }
  const double p_o = agree / n;
  const double pa = a_drunk / n, pb = b_drunk / n;
  const double p_e = pa * pb + (1.0 - pa) * (1.0 - pb);
  if (p_e == 1.0) return p_o == 1.0 ? 1.0 : 0.0;
  return (p_o - p_e) / (1.0 - p_e);
}

std::vector<Annotation> ReadAnnotations(std::istream &in,
                                        const std::string &source) {
  std::vector<Annotation> annotations;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Annotation a;
    try {
      nlohmann::json obj = nlohmann::json::parse(line);
      a.id = obj.at("id").get<std::string>();
      a.annotator = obj.at("annotator").get<std::string>();
      a.label = ParseLabel(obj.at("label").get<std::string>());
    } catch (const nlohmann::json::exception &e) {
      throw ParseError(source, line_no, e.what());
    } catch (const ConfigError &e) {
      throw ParseError(source, line_no, e.what());
    }
    if (!seen.emplace(a.annotator, a.id).second) {
      throw DataError(source + ":" + std::to_string(line_no) + ": annotator '" +
                      a.annotator + "' labels id '" + a.id + "' twice");
    }
    annotations.push_back(std::move(a));
  }
  return annotations;
}

KappaMatrix PairwiseKappa(std::span<const Annotation> annotations) {
  std::map<std::string, std::map<std::string, Label>> by_annotator;
  for (const Annotation &a : annotations) by_annotator[a.annotator][a.id] = a.label;

  KappaMatrix matrix;
  for (const auto &[name, labels] : by_annotator) matrix.annotators.push_back(name);
  const std::size_t m = matrix.annotators.size();
  matrix.kappa.assign(m, std::vector<std::optional<double>>(m));
  matrix.overlap.assign(m, std::vector<std::size_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    const auto &left = by_annotator[matrix.annotators[i]];
    matrix.kappa[i][i] = 1.0;
    matrix.overlap[i][i] = left.size();
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto &right = by_annotator[matrix.annotators[j]];
      std::vector<Label> a, b;
      for (const auto &[id, label] : left) {
        if (auto it = right.find(id); it != right.end()) {
          a.push_back(label);
          b.push_back(it->second);
        }
      }
      matrix.overlap[i][j] = matrix.overlap[j][i] = a.size();
      if (!a.empty()) matrix.kappa[i][j] = matrix.kappa[j][i] = CohenKappa(a, b);
    }
  }
  return matrix;
}

void WriteKappaTsv(std::ostream &out, const KappaMatrix &matrix) {
  out << "annotator";
  for (const std::string &name : matrix.annotators) out << '\t' << name;
  out << '\n';
  for (std::size_t i = 0; i < matrix.annotators.size(); ++i) {
    out << matrix.annotators[i];
    for (const auto &value : matrix.kappa[i]) {
      out << '\t' << (value ? FormatFixed(*value, 6) : "—");
    }
    out << '\n';
  }
}

}  // namespace soberlens::eval
