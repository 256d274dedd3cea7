#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slnet/errors.hpp"
#include "slnet/tensor.hpp"

namespace slnet {

// Scene category of a sequence: whether the ego vehicle is moving.
// kUnknown is only a placeholder for unlabeled data; every operation that
// branches on scene requires a known label.
enum class Scene : std::uint8_t { kStatic = 0, kDynamic = 1, kUnknown = 2 };

inline const char* scene_name(Scene s) {
  switch (s) {
    case Scene::kStatic: return "static";
    case Scene::kDynamic: return "dynamic";
    default: return "unknown";
  }
}

Scene scene_from_name(const std::string& name);

inline bool scene_known(Scene s) { return s != Scene::kUnknown; }

constexpr std::size_t kRfChannels = 2;  // real + imaginary plane

// One range-azimuth frame: data laid out (C_RF, W, H) with W the azimuth
// axis and H the range axis.
struct RadarFrame {
  Tensor data;
  std::size_t frame_index = 0;

  RadarFrame() = default;
  RadarFrame(Tensor d, std::size_t index);

  std::size_t grid_size() const { return data.dim(1); }
};

struct RadarSequence {
  std::vector<RadarFrame> frames;
  Scene scene = Scene::kUnknown;
  std::string sequence_id;

  std::size_t num_frames() const { return frames.size(); }
  std::size_t grid_size() const;
  void validate() const;  // contiguous indices, consistent shapes
};

// A tau-frame window of a sequence: data (C_RF, T, W, H).
struct RadarSnippet {
  Tensor data;
  std::string source_sequence;
  std::size_t start_frame = 0;
  Scene scene = Scene::kUnknown;

  std::size_t window() const { return data.dim(1); }
  std::size_t grid_size() const { return data.dim(2); }
};

struct ObjectAnnotation {
  std::size_t frame_index = 0;
  std::size_t class_id = 0;
  std::size_t range_idx = 0;    // along H
  std::size_t azimuth_idx = 0;  // along W
};

struct Detection {
  std::size_t frame_index = 0;
  std::size_t class_id = 0;
  std::size_t range_idx = 0;
  std::size_t azimuth_idx = 0;
  float confidence = 0.0f;
};

// Per-class object confidence in [0,1], shape (C_cls, T, W, H). The
// constructor is the single place the range invariant is enforced.
struct ConfMap {
  Tensor data;

  ConfMap() = default;
  explicit ConfMap(Tensor d);

  std::size_t num_classes() const { return data.dim(0); }
  std::size_t window() const { return data.dim(1); }
  std::size_t grid_size() const { return data.dim(2); }
};

// Sliding-window slicing. Snippets start at 0, stride, 2*stride, ...; the
// final window is anchored to end exactly at the last frame so every frame
// is covered. Returns the start offsets alongside the snippets.
std::vector<std::size_t> snippet_starts(std::size_t num_frames, std::size_t window,
                                        std::size_t stride);
std::vector<RadarSnippet> slice_snippets(const RadarSequence& seq, std::size_t window,
                                         std::size_t stride);

}  // namespace slnet
