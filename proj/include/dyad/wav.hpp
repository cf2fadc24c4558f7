#pragma once

// Canonical WAV I/O for the corpus: mono, 44 100 Hz, 16-bit PCM, 44-byte
// header. Nothing else is accepted or produced.

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dyad {

constexpr int kAudioRateHz = 44100;
constexpr int kAudioBytesPerSample = 2;
constexpr std::uint64_t kWavHeaderBytes = 44;

// Expected on-disk size of a canonical recording of the given duration.
inline std::uint64_t expected_wav_bytes(double duration_s,
                                        int rate_hz = kAudioRateHz,
                                        int bytes_per_sample = kAudioBytesPerSample) {
  auto samples = static_cast<std::uint64_t>(duration_s * rate_hz + 0.5);
  return samples * static_cast<std::uint64_t>(bytes_per_sample) + kWavHeaderBytes;
}

namespace detail {

inline void put_u32(std::vector<unsigned char>& b, std::uint32_t v) {
  b.push_back(v & 0xff);
  b.push_back((v >> 8) & 0xff);
  b.push_back((v >> 16) & 0xff);
  b.push_back((v >> 24) & 0xff);
}

inline void put_u16(std::vector<unsigned char>& b, std::uint16_t v) {
  b.push_back(v & 0xff);
  b.push_back((v >> 8) & 0xff);
}

}  // namespace detail

inline std::vector<unsigned char> wav_header(std::uint32_t n_samples,
                                             int rate_hz = kAudioRateHz) {
  std::uint32_t data_bytes = n_samples * 2;
  std::vector<unsigned char> h;
  h.reserve(kWavHeaderBytes);
  auto tag = [&](const char* s) { h.insert(h.end(), s, s + 4); };
  tag("RIFF");
  detail::put_u32(h, 36 + data_bytes);
  tag("WAVE");
  tag("fmt ");
  detail::put_u32(h, 16);
  detail::put_u16(h, 1);  // PCM
  detail::put_u16(h, 1);  // mono
  detail::put_u32(h, static_cast<std::uint32_t>(rate_hz));
  detail::put_u32(h, static_cast<std::uint32_t>(rate_hz * 2));
  detail::put_u16(h, 2);   // block align
  detail::put_u16(h, 16);  // bits per sample
  tag("data");
  detail::put_u32(h, data_bytes);
  return h;
}

// Samples are floats in [-1, 1]; values outside are clipped.
inline void write_wav(const std::string& path, const std::vector<float>& samples,
                      int rate_hz = kAudioRateHz) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("wav: cannot write " + path);
  auto header = wav_header(static_cast<std::uint32_t>(samples.size()), rate_hz);
  out.write(reinterpret_cast<const char*>(header.data()),
            static_cast<std::streamsize>(header.size()));
  std::vector<char> buf(samples.size() * 2);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    float x = samples[i];
    if (x > 1.0f) x = 1.0f;
    if (x < -1.0f) x = -1.0f;
    auto s = static_cast<std::int16_t>(x >= 0 ? x * 32767.0f + 0.5f
                                              : x * 32767.0f - 0.5f);
    buf[2 * i] = static_cast<char>(s & 0xff);
    buf[2 * i + 1] = static_cast<char>((s >> 8) & 0xff);
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

// Writes a file whose header claims `claimed_samples` but whose payload is
// truncated to `actual_samples`. Emulates the interrupted writes that the
// corruption check screens for.
inline void write_truncated_wav(const std::string& path,
                                std::uint32_t claimed_samples,
                                const std::vector<float>& actual,
                                int rate_hz = kAudioRateHz) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("wav: cannot write " + path);
  auto header = wav_header(claimed_samples, rate_hz);
  out.write(reinterpret_cast<const char*>(header.data()),
            static_cast<std::streamsize>(header.size()));
  for (float x : actual) {
    auto s = static_cast<std::int16_t>(std::max(-1.0f, std::min(1.0f, x)) * 32767.0f);
    char b[2] = {static_cast<char>(s & 0xff), static_cast<char>((s >> 8) & 0xff)};
    out.write(b, 2);
  }
}

struct WavData {
  int rate_hz = 0;
  std::vector<float> samples;
};

inline WavData read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("wav: cannot open " + path);
  unsigned char h[kWavHeaderBytes];
  if (!in.read(reinterpret_cast<char*>(h), kWavHeaderBytes)) {
    throw std::runtime_error("wav: short header in " + path);
  }
  auto u16 = [&](int off) {
    return static_cast<std::uint32_t>(h[off]) | (static_cast<std::uint32_t>(h[off + 1]) << 8);
  };
  auto u32 = [&](int off) {
    return u16(off) | (u16(off + 2) << 16);
  };
  if (std::memcmp(h, "RIFF", 4) != 0 || std::memcmp(h + 8, "WAVE", 4) != 0 ||
      std::memcmp(h + 12, "fmt ", 4) != 0 || std::memcmp(h + 36, "data", 4) != 0) {
    throw std::runtime_error("wav: not a canonical PCM file: " + path);
  }
  if (u16(20) != 1 || u16(22) != 1 || u16(34) != 16) {
    throw std::runtime_error("wav: need mono 16-bit PCM: " + path);
  }
  WavData w;
  w.rate_hz = static_cast<int>(u32(24));
  std::uint32_t data_bytes = u32(40);
  w.samples.reserve(data_bytes / 2);
  std::vector<char> buf(data_bytes);
  in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
  auto got = static_cast<std::size_t>(in.gcount()) / 2;
  for (std::size_t i = 0; i < got; ++i) {
    auto lo = static_cast<unsigned char>(buf[2 * i]);
    auto hi = static_cast<unsigned char>(buf[2 * i + 1]);
    auto s = static_cast<std::int16_t>(lo | (hi << 8));
    w.samples.push_back(static_cast<float>(s) / 32767.0f);
  }
  return w;
}

}  // namespace dyad
