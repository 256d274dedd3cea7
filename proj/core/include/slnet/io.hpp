#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "slnet/tensor.hpp"
#include "slnet/types.hpp"

namespace slnet {

inline std::vector<std::string> default_class_names() {
  return {"pedestrian", "cyclist", "car"};
}

// RDT1 stream format: magic "RDT1", u32 rank, rank x u32 dims, then
// dims-product little-endian f32 payload, row-major with the last axis
// fastest.
void write_rdt1(std::ostream& os, const Tensor& t);
Tensor read_rdt1(std::istream& is);

void write_rdt1_file(const std::filesystem::path& path, const Tensor& t);
Tensor read_rdt1_file(const std::filesystem::path& path);

// All file writes go through here: write to a temp file in the same
// directory, then rename over the target.
void atomic_write(const std::filesystem::path& path, const std::string& bytes);

// Annotation CSV, header `frame,class,range,azimuth`. grid_size and
// num_classes bound-check every row on read.
std::string annotations_to_csv(const std::vector<ObjectAnnotation>& anns);
std::vector<ObjectAnnotation> parse_annotations_csv(const std::string& text,
                                                    std::size_t grid_size,
                                                    std::size_t num_classes);

// Detection CSV, header `frame,class,range,azimuth,confidence`, sorted by
// (frame, descending confidence).
void write_detections_csv(const std::filesystem::path& path, std::vector<Detection> dets);
std::vector<Detection> read_detections_csv(const std::filesystem::path& path);

struct SequenceOnDisk {
  RadarSequence sequence;
  std::optional<std::vector<ObjectAnnotation>> annotations;
  std::vector<std::string> classes;
};

// Directory layout per sequence: frames.rdt (F, C_RF, W, H), meta.json
// sidecar, annotations.csv when present.
void write_sequence(const RadarSequence& seq, const std::filesystem::path& dir,
                    const std::vector<ObjectAnnotation>* annotations = nullptr,
                    const std::vector<std::string>& classes = default_class_names());
SequenceOnDisk read_sequence(const std::filesystem::path& dir);

}  // namespace slnet
