#include "slnet/io.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "slnet/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "RDT1 I/O assumes a little-endian host");

namespace slnet {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr char kMagic[4] = {'R', 'D', 'T', '1'};

void write_u32(std::ostream& os, std::uint32_t v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint32_t read_u32(std::istream& is, const char* what) {
  std::uint32_t v = 0;
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  if (!is) throw DataError(std::string("truncated RDT1 stream while reading ") + what);
  return v;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::size_t parse_index(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw DataError(std::string("bad CSV field for ") + what + ": '" + s + "'");
  }
}

}  // namespace

void write_rdt1(std::ostream& os, const Tensor& t) {
  check(t.rank() > 0, "cannot serialize rank-0 tensor");
  os.write(kMagic, 4);
  write_u32(os, static_cast<std::uint32_t>(t.rank()));
  for (std::size_t d : t.dims()) write_u32(os, static_cast<std::uint32_t>(d));
  os.write(reinterpret_cast<const char*>(t.data()),
           static_cast<std::streamsize>(t.size() * sizeof(float)));
  if (!os) throw DataError("I/O failure while writing RDT1 tensor");
}

Tensor read_rdt1(std::istream& is) {
  char magic[4] = {};
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw DataError("bad RDT1 magic");
  std::uint32_t rank = read_u32(is, "rank");
  if (rank == 0 || rank > 8) throw DataError("unreasonable RDT1 rank");
  std::vector<std::size_t> dims(rank);
  for (auto& d : dims) {
    d = read_u32(is, "dims");
    if (d == 0) throw DataError("zero RDT1 dimension");
  }
  Tensor t(dims);
  is.read(reinterpret_cast<char*>(t.data()),
          static_cast<std::streamsize>(t.size() * sizeof(float)));
  if (is.gcount() != static_cast<std::streamsize>(t.size() * sizeof(float)))
    throw DataError("truncated RDT1 payload");
  return t;
}

void write_rdt1_file(const fs::path& path, const Tensor& t) {
  std::ostringstream ss(std::ios::binary);
  write_rdt1(ss, t);
  atomic_write(path, ss.str());
}

Tensor read_rdt1_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return read_rdt1(in);
}

void atomic_write(const fs::path& path, const std::string& bytes) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot open " + tmp.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw DataError("I/O failure while writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw DataError("cannot rename " + tmp.string() + " -> " + path.string() + ": " +
                          ec.message());
}

std::string annotations_to_csv(const std::vector<ObjectAnnotation>& anns) {
  std::ostringstream ss;
  ss << "frame,class,range,azimuth\n";
  for (const auto& a : anns)
    ss << a.frame_index << ',' << a.class_id << ',' << a.range_idx << ',' << a.azimuth_idx
       << '\n';
  return ss.str();
}

std::vector<ObjectAnnotation> parse_annotations_csv(const std::string& text,
                                                    std::size_t grid_size,
                                                    std::size_t num_classes) {
  std::istringstream ss(text);
  std::string line;
  if (!std::getline(ss, line)) throw DataError("empty annotation CSV");
  std::vector<ObjectAnnotation> out;
  while (std::getline(ss, line)) {
    if (line.empty() || line == "\r") continue;
    auto f = split_csv_line(line);
    if (f.size() != 4) throw DataError("annotation row needs 4 fields: '" + line + "'");
    ObjectAnnotation a;
    a.frame_index = parse_index(f[0], "frame");
    a.class_id = parse_index(f[1], "class");
    a.range_idx = parse_index(f[2], "range");
    a.azimuth_idx = parse_index(f[3], "azimuth");
    if (a.class_id >= num_classes)
      throw DataError("annotation class " + std::to_string(a.class_id) + " out of range");
    if (a.range_idx >= grid_size || a.azimuth_idx >= grid_size)
      throw DataError("annotation location out of grid bounds: '" + line + "'");
    out.push_back(a);
  }
  return out;
}

void write_detections_csv(const fs::path& path, std::vector<Detection> dets) {
  std::stable_sort(dets.begin(), dets.end(), [](const Detection& a, const Detection& b) {
    if (a.frame_index != b.frame_index) return a.frame_index < b.frame_index;
    if (a.confidence != b.confidence) return a.confidence > b.confidence;
    return std::tie(a.class_id, a.range_idx, a.azimuth_idx) <
           std::tie(b.class_id, b.range_idx, b.azimuth_idx);
  });
  std::ostringstream ss;
  ss << "frame,class,range,azimuth,confidence\n";
  ss.precision(9);
  for (const auto& d : dets)
    ss << d.frame_index << ',' << d.class_id << ',' << d.range_idx << ',' << d.azimuth_idx
       << ',' << d.confidence << '\n';
  atomic_write(path, ss.str());
}

std::vector<Detection> read_detections_csv(const fs::path& path) {
  std::istringstream ss(slurp(path));
  std::string line;
  if (!std::getline(ss, line)) throw DataError("empty detection CSV " + path.string());
  std::vector<Detection> out;
  while (std::getline(ss, line)) {
    if (line.empty() || line == "\r") continue;
    auto f = split_csv_line(line);
    if (f.size() != 5) throw DataError("detection row needs 5 fields: '" + line + "'");
    Detection d;
    d.frame_index = parse_index(f[0], "frame");
    d.class_id = parse_index(f[1], "class");
    d.range_idx = parse_index(f[2], "range");
    d.azimuth_idx = parse_index(f[3], "azimuth");
    try {
      d.confidence = std::stof(f[4]);
    } catch (const std::exception&) {
      throw DataError("bad confidence field: '" + f[4] + "'");
    }
    if (d.confidence < 0.0f || d.confidence > 1.0f)
      throw DataError("confidence out of [0,1]: '" + line + "'");
    out.push_back(d);
  }
  return out;
}

void write_sequence(const RadarSequence& seq, const fs::path& dir,
                    const std::vector<ObjectAnnotation>* annotations,
                    const std::vector<std::string>& classes) {
  check(!seq.frames.empty(), "refusing to write empty sequence");
  seq.validate();
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError("cannot create " + dir.string() + ": " + ec.message());

  std::size_t g = seq.grid_size();
  Tensor all({seq.num_frames(), kRfChannels, g, g});
  for (std::size_t i = 0; i < seq.num_frames(); ++i)
    std::copy(seq.frames[i].data.data(), seq.frames[i].data.data() + kRfChannels * g * g,
              all.data() + all.idx4(i, 0, 0, 0));
  write_rdt1_file(dir / "frames.rdt", all);

  json meta;
  meta["sequence_id"] = seq.sequence_id;
  if (scene_known(seq.scene)) meta["scene"] = scene_name(seq.scene);
  meta["grid_size"] = g;
  meta["num_frames"] = seq.num_frames();
  meta["classes"] = classes;
  atomic_write(dir / "meta.json", meta.dump(2) + "\n");

  if (annotations) {
    for (const auto& a : *annotations) {
      check(a.range_idx < g && a.azimuth_idx < g, "annotation out of grid bounds");
      check(a.frame_index < seq.num_frames(), "annotation frame out of range");
      check(a.class_id < classes.size(), "annotation class out of range");
    }
    atomic_write(dir / "annotations.csv", annotations_to_csv(*annotations));
  }
}

SequenceOnDisk read_sequence(const fs::path& dir) {
  json meta;
  try {
    meta = json::parse(slurp(dir / "meta.json"));
  } catch (const json::exception& e) {
    throw DataError("bad sidecar " + (dir / "meta.json").string() + ": " + e.what());
  }

  SequenceOnDisk out;
  out.sequence.sequence_id = meta.value("sequence_id", dir.filename().string());
  out.sequence.scene =
      meta.contains("scene") ? scene_from_name(meta["scene"].get<std::string>())
                             : Scene::kUnknown;
  out.classes = meta.value("classes", default_class_names());

  Tensor all = read_rdt1_file(dir / "frames.rdt");
  if (all.rank() != 4 || all.dim(1) != kRfChannels)
    throw DataError("frames.rdt must be (F, C_RF, W, H)");
  std::size_t frames = all.dim(0), g = all.dim(2);
  if (meta.contains("grid_size") && meta["grid_size"].get<std::size_t>() != g)
    throw DataError("sidecar grid_size disagrees with frames.rdt");
  if (meta.contains("num_frames") && meta["num_frames"].get<std::size_t>() != frames)
    throw DataError("sidecar num_frames disagrees with frames.rdt");

  out.sequence.frames.reserve(frames);
  for (std::size_t i = 0; i < frames; ++i) {
    Tensor f({kRfChannels, g, g});
    std::copy(all.data() + all.idx4(i, 0, 0, 0),
              all.data() + all.idx4(i, 0, 0, 0) + kRfChannels * g * g, f.data());
    out.sequence.frames.emplace_back(std::move(f), i);
  }

  fs::path ann = dir / "annotations.csv";
  if (fs::exists(ann))
    out.annotations = parse_annotations_csv(slurp(ann), g, out.classes.size());
  return out;
}

}  // namespace slnet
