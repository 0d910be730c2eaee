// src/metric/checkpoint.cpp

// Copyright 2026  melfew authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "melfew/metric/checkpoint.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "melfew/common/error.hpp"
#include "melfew/neural/checkpoint.hpp"

namespace melfew {
namespace metric {

void save_siamese(const SiameseModel &model, std::ostream &out) {
  out << "melfew-siamese 1\n";
  out << "kappa " << neural::format_hex_double(model.config.kappa) << "\n";
  out << "margin " << neural::format_hex_double(model.config.margin) << "\n";
  out << "objective " << to_string(model.config.objective) << "\n";
  out << "distance " << to_string(model.config.distance) << "\n";
  out << "trunk\n";
  neural::save_net(model.trunk, out);
  out << "verification_head " << (model.verification_head ? 1 : 0) << "\n";
  if (model.verification_head) neural::save_net(*model.verification_head, out);
  out << "head " << (model.head ? 1 : 0) << "\n";
  if (model.head) neural::save_net(*model.head, out);
}

void save_siamese(const SiameseModel &model, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw Error("io", "cannot write checkpoint '" + path + "'");
  save_siamese(model, out);
  if (!out) throw Error("io", "short write on checkpoint '" + path + "'");
}

SiameseModel load_siamese(std::istream &in) {
  std::string magic, tok;
  int version = 0;
  if (!(in >> magic >> version) || magic != "melfew-siamese")
    throw Error("parse", "siamese checkpoint: bad magic");
  if (version != 1)
    throw Error("parse", "siamese checkpoint: unsupported version " +
                             std::to_string(version));
  SiameseModel m;
  std::string value;
  if (!(in >> tok >> value) || tok != "kappa")
    throw Error("parse", "siamese checkpoint: expected kappa");
  m.config.kappa = neural::parse_hex_double(value, "kappa");
  if (!(in >> tok >> value) || tok != "margin")
    throw Error("parse", "siamese checkpoint: expected margin");
  m.config.margin = neural::parse_hex_double(value, "margin");
  if (!(in >> tok >> value) || tok != "objective")
    throw Error("parse", "siamese checkpoint: expected objective");
  m.config.objective = parse_objective(value);
  if (!(in >> tok >> value) || tok != "distance")
    throw Error("parse", "siamese checkpoint: expected distance");
  m.config.distance = parse_distance(value);
  validate_config(m.config);
  if (!(in >> tok) || tok != "trunk")
    throw Error("parse", "siamese checkpoint: expected trunk");
  m.trunk = neural::load_net(in);
  int flag = 0;
  if (!(in >> tok >> flag) || tok != "verification_head")
    throw Error("parse", "siamese checkpoint: expected verification_head");
  if (flag) m.verification_head = neural::load_net(in);
  if (!(in >> tok >> flag) || tok != "head")
    throw Error("parse", "siamese checkpoint: expected head");
  if (flag) m.head = neural::load_net(in);
  return m;
}

SiameseModel load_siamese(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open checkpoint '" + path + "'");
  return load_siamese(in);
}

}  // namespace metric
}  // namespace melfew
