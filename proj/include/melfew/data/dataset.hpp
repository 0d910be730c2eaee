// include/melfew/data/dataset.hpp

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

#ifndef MELFEW_DATA_DATASET_HPP_
#define MELFEW_DATA_DATASET_HPP_

#include <string>
#include <vector>

#include "melfew/data/types.hpp"

namespace melfew {
namespace data {

// Feature CSV: header "utterance_id,speaker_id,emotion,domain,f0,...,fN-1",
// one row per utterance.  Duplicate utterance ids and inconsistent dims are
// schema errors; all rows must share one domain.
Dataset load_feature_csv(const std::string &path);
void save_feature_csv(const Dataset &dataset, const std::string &path);

// WAV manifest: whitespace-separated "wav_path speaker_id emotion domain"
// per line, '#' comments allowed.
struct ManifestEntry {
  std::string wav_path;
  std::string speaker_id;
  Emotion emotion = Emotion::kAnger;
  DomainRole domain = DomainRole::kSource;
};

std::vector<ManifestEntry> parse_manifest(const std::string &path);

}  // namespace data
}  // namespace melfew

#endif  // MELFEW_DATA_DATASET_HPP_
