// src/neural/checkpoint.cpp

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

#include "melfew/neural/checkpoint.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>

#include "melfew/common/error.hpp"

namespace melfew {
namespace neural {

std::string format_hex_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%a", v);
  return buf;
}

double parse_hex_double(const std::string &token, const std::string &what) {
  const char *begin = token.c_str();
  char *end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw Error("parse", what + ": bad number '" + token + "'");
  return v;
}

void save_net(const DenseNet &net, std::ostream &out) {
  out << "melfew-net 1\n";
  out << "layers " << net.num_layers() << "\n";
  for (std::size_t l = 0; l < net.num_layers(); ++l) {
    const LayerSpec &spec = net.layers()[l];
    out << "layer " << spec.in_dim << " " << spec.out_dim << " "
        << to_string(spec.activation) << "\n";
    const Matrix &w = net.weight(l);
    for (std::size_t r = 0; r < w.rows; ++r) {
      out << "w";
      for (std::size_t c = 0; c < w.cols; ++c)
        out << " " << format_hex_double(w(r, c));
      out << "\n";
    }
    out << "b";
    for (double b : net.bias(l)) out << " " << format_hex_double(b);
    out << "\n";
  }
}

void save_net(const DenseNet &net, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw Error("io", "cannot write checkpoint '" + path + "'");
  save_net(net, out);
  if (!out) throw Error("io", "short write on checkpoint '" + path + "'");
}

DenseNet load_net(std::istream &in) {
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != "melfew-net")
    throw Error("parse", "checkpoint: bad magic");
  if (version != 1)
    throw Error("parse",
                "checkpoint: unsupported version " + std::to_string(version));
  std::string tok;
  std::size_t num_layers = 0;
  if (!(in >> tok >> num_layers) || tok != "layers")
    throw Error("parse", "checkpoint: expected 'layers <n>'");
  std::vector<LayerSpec> specs(num_layers);
  std::vector<Matrix> weights;
  std::vector<Vector> biases;
  for (std::size_t l = 0; l < num_layers; ++l) {
    std::string act;
    if (!(in >> tok >> specs[l].in_dim >> specs[l].out_dim >> act) ||
        tok != "layer")
      throw Error("parse", "checkpoint: expected 'layer <in> <out> <act>'");
    specs[l].activation = parse_activation(act);
    Matrix w(specs[l].out_dim, specs[l].in_dim);
    for (std::size_t r = 0; r < w.rows; ++r) {
      if (!(in >> tok) || tok != "w")
        throw Error("parse", "checkpoint: expected weight row");
      for (std::size_t c = 0; c < w.cols; ++c) {
        if (!(in >> tok)) throw Error("parse", "checkpoint: truncated weights");
        w(r, c) = parse_hex_double(tok, "checkpoint weight");
      }
    }
    Vector b(specs[l].out_dim);
    if (!(in >> tok) || tok != "b")
      throw Error("parse", "checkpoint: expected bias row");
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!(in >> tok)) throw Error("parse", "checkpoint: truncated biases");
      b[i] = parse_hex_double(tok, "checkpoint bias");
    }
    weights.push_back(std::move(w));
    biases.push_back(std::move(b));
  }
  DenseNet net(specs);
  for (std::size_t l = 0; l < num_layers; ++l) {
    net.weight(l) = std::move(weights[l]);
    net.bias(l) = std::move(biases[l]);
  }
  return net;
}

DenseNet load_net(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open checkpoint '" + path + "'");
  return load_net(in);
}

}  // namespace neural
}  // namespace melfew
