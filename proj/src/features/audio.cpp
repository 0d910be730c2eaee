// src/features/audio.cpp

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

#include "melfew/features/audio.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "melfew/common/error.hpp"

namespace melfew {
namespace features {

namespace {

std::uint32_t read_u32(const unsigned char *p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char *p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::uint32_t v, std::string *s) {
  s->push_back(static_cast<char>(v & 0xff));
  s->push_back(static_cast<char>((v >> 8) & 0xff));
  s->push_back(static_cast<char>((v >> 16) & 0xff));
  s->push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u16(std::uint16_t v, std::string *s) {
  s->push_back(static_cast<char>(v & 0xff));
  s->push_back(static_cast<char>((v >> 8) & 0xff));
}

}  // namespace

AudioClip read_wav(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot open WAV file '" + path + "'");
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  const unsigned char *p = reinterpret_cast<const unsigned char *>(bytes.data());
  if (bytes.size() < 12 || std::memcmp(p, "RIFF", 4) != 0 ||
      std::memcmp(p + 8, "WAVE", 4) != 0)
    throw Error("input", "'" + path + "' is not a RIFF/WAVE file");

  AudioClip clip;
  bool have_fmt = false, have_data = false;
  std::uint16_t channels = 0, bits = 0, format = 0;
  std::size_t pos = 12;
  std::size_t data_off = 0, data_len = 0;
  while (pos + 8 <= bytes.size()) {
    std::uint32_t chunk_len = read_u32(p + pos + 4);
    const char *id = bytes.data() + pos;
    std::size_t body = pos + 8;
    if (body + chunk_len > bytes.size())
      throw Error("input", "'" + path + "': truncated chunk");
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (chunk_len < 16) throw Error("input", "'" + path + "': short fmt chunk");
      format = read_u16(p + body);
      channels = read_u16(p + body + 2);
      clip.sample_rate = static_cast<int>(read_u32(p + body + 4));
      bits = read_u16(p + body + 14);
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      data_off = body;
      data_len = chunk_len;
      have_data = true;
    }
    pos = body + chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }
  if (!have_fmt || !have_data)
    throw Error("input", "'" + path + "': missing fmt or data chunk");
  if (format != 1) throw Error("input", "'" + path + "': not PCM");
  if (bits != 16) throw Error("input", "'" + path + "': not 16-bit");
  if (channels != 1) throw Error("input", "'" + path + "': not mono");
  if (clip.sample_rate <= 0)
    throw Error("input", "'" + path + "': bad sample rate");

  std::size_t n = data_len / 2;
  clip.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int16_t s = static_cast<std::int16_t>(read_u16(p + data_off + 2 * i));
    clip.samples[i] = static_cast<double>(s) / 32768.0;
  }
  return clip;
}

void write_wav(const std::string &path, const AudioClip &clip) {
  if (clip.sample_rate <= 0) throw Error("input", "write_wav: bad sample rate");
  std::string out;
  std::uint32_t data_len = static_cast<std::uint32_t>(clip.samples.size() * 2);
  out.reserve(44 + data_len);
  out += "RIFF";
  put_u32(36 + data_len, &out);
  out += "WAVEfmt ";
  put_u32(16, &out);
  put_u16(1, &out);  // PCM
  put_u16(1, &out);  // mono
  put_u32(static_cast<std::uint32_t>(clip.sample_rate), &out);
  put_u32(static_cast<std::uint32_t>(clip.sample_rate) * 2, &out);
  put_u16(2, &out);   // block align
  put_u16(16, &out);  // bits
  out += "data";
  put_u32(data_len, &out);
  for (double x : clip.samples) {
    double scaled = x * 32768.0;
    if (scaled > 32767.0) scaled = 32767.0;
    if (scaled < -32768.0) scaled = -32768.0;
    put_u16(static_cast<std::uint16_t>(static_cast<std::int16_t>(scaled)), &out);
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("io", "cannot write WAV file '" + path + "'");
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw Error("io", "short write on '" + path + "'");
}

}  // namespace features
}  // namespace melfew
