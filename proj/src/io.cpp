#include "tonnetz/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tonnetz/errors.hpp"

namespace tonnetz {

namespace {

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string export_dot(const Graph& g, const std::vector<std::string>& labels,
                       const std::string& name) {
  if (!labels.empty() && static_cast<int>(labels.size()) != g.vertex_count()) {
    fail("label count does not match vertex count");
  }
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (!labels.empty()) out << " [label=" << quoted(labels[v]) << "]";
    out << ";\n";
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int w : g.neighbors(v)) {
      if (v < w) out << "  " << v << " -- " << w << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const LeviGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=" << quoted(g.label(v)) << " shape="
        << (g.is_white(v) ? "ellipse" : "box") << "];\n";
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int w : g.graph.neighbors(v)) {
      if (v < w) out << "  " << v << " -- " << w << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string export_csv(const CycleTable& t) { return t.csv(); }

std::string export_json(const IncidenceStructure& s) {
  nlohmann::ordered_json doc;
  doc["name"] = s.name();
  doc["points"] = s.point_labels();
  doc["blocks"] = nlohmann::ordered_json::array();
  for (const auto& block : s.blocks()) {
    nlohmann::ordered_json entry;
    entry["label"] = block.label;
    entry["points"] = block.points;
    doc["blocks"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

IncidenceStructure import_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("structure text is not JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("structure JSON must be an object");
  if (!doc.contains("name") || !doc["name"].is_string()) {
    fail("structure JSON needs a string field: name");
  }
  if (!doc.contains("points") || !doc["points"].is_array()) {
    fail("structure JSON needs an array field: points");
  }
  if (!doc.contains("blocks") || !doc["blocks"].is_array()) {
    fail("structure JSON needs an array field: blocks");
  }
  std::vector<std::string> points;
  for (const auto& entry : doc["points"]) {
    if (!entry.is_string()) fail("every point must be a string label");
    points.push_back(entry.get<std::string>());
  }
  std::vector<Block> blocks;
  for (const auto& entry : doc["blocks"]) {
    if (!entry.is_object() || !entry.contains("label") || !entry["label"].is_string()) {
      fail("every block needs a string field: label");
    }
    Block block;
    block.label = entry["label"].get<std::string>();
    if (!entry.contains("points") || !entry["points"].is_array()) {
      fail("block " + block.label + " needs an array field: points");
    }
    for (const auto& p : entry["points"]) {
      if (!p.is_number_integer()) {
        fail("block " + block.label + " has a non-integer point");
      }
      block.points.push_back(p.get<int>());
    }
    blocks.push_back(std::move(block));
  }
  return IncidenceStructure(doc["name"].get<std::string>(), std::move(points),
                            std::move(blocks));
}

namespace {

void append_u16(std::string& out, unsigned value) {
  out.push_back(static_cast<char>((value >> 8) & 0xff));
  out.push_back(static_cast<char>(value & 0xff));
}

void append_u32(std::string& out, unsigned long value) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    out.push_back(static_cast<char>((value >> shift) & 0xff));
  }
}

void append_delta(std::string& out, long ticks) {
  // Variable-length quantity, most significant septet first.
  std::string bytes(1, static_cast<char>(ticks & 0x7f));
  ticks >>= 7;
  while (ticks > 0) {
    bytes.insert(bytes.begin(), static_cast<char>(0x80 | (ticks & 0x7f)));
    ticks >>= 7;
  }
  out += bytes;
}

int midi_note(PitchClass pitch, int octave) {
  int note = 12 * (octave + 1) + pitch.value();
  if (note < 0 || note > 127) {
    fail("tone " + pitch.name() + " falls outside the playable range");
  }
  return note;
}

constexpr int kTicksPerQuarter = 480;
constexpr unsigned char kVelocity = 80;

}  // namespace

std::string export_midi(const Score& score) {
  std::string track;
  long cursor = 0;  // ticks written so far
  long pending = 0; // delta owed to the next message

  auto note_on = [&track, &pending](int note) {
    append_delta(track, pending);
    pending = 0;
    track.push_back(static_cast<char>(0x90));
    track.push_back(static_cast<char>(note));
    track.push_back(static_cast<char>(kVelocity));
  };
  auto note_off = [&track, &pending](int note) {
    append_delta(track, pending);
    pending = 0;
    track.push_back(static_cast<char>(0x80));
    track.push_back(static_cast<char>(note));
    track.push_back(static_cast<char>(0));
  };

  int pedal_note = 0;
  if (score.pedal) {
    pedal_note = midi_note(*score.pedal, 2);
    note_on(pedal_note);
  }
  for (const auto& event : score.events) {
    if (event.beats <= 0.0) fail("every event needs a positive duration");
    std::vector<int> notes;
    notes.reserve(event.tones.size());
    for (PitchClass tone : event.tones) notes.push_back(midi_note(tone, 4));
    for (int note : notes) note_on(note);
    long end = cursor + std::llround(event.beats * kTicksPerQuarter);
    pending = end - cursor;
    cursor = end;
    for (int note : notes) note_off(note);
  }
  if (score.pedal) note_off(pedal_note);
  append_delta(track, pending);
  track += "\xff\x2f";
  track.push_back('\0');

  std::string out = "MThd";
  append_u32(out, 6);
  append_u16(out, 0);  // single-track format
  append_u16(out, 1);
  append_u16(out, kTicksPerQuarter);
  out += "MTrk";
  append_u32(out, track.size());
  out += track;
  return out;
}

namespace {

std::string fixed2(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return buffer;
}

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

constexpr double kHexSize = 48.0;
constexpr double kSqrt3 = 1.7320508075688772;

/// Flat-top hexagon centers; the vertex toward corner slot k sits at
/// angle 60 - 60k degrees (y grows downward in SVG).
std::pair<double, double> hex_center(int q, int r) {
  return {kHexSize * 1.5 * q, kHexSize * kSqrt3 * (r + q / 2.0)};
}

std::pair<double, double> hex_vertex(double cx, double cy, int corner) {
  double angle = (60.0 - 60.0 * corner) * 3.14159265358979323846 / 180.0;
  return {cx + kHexSize * std::cos(angle), cy + kHexSize * std::sin(angle)};
}

}  // namespace

std::string export_svg(const TessellationPatch& patch) {
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  bool first = true;
  for (const auto& cell : patch.cells) {
    auto [cx, cy] = hex_center(cell.q, cell.r);
    for (int k = 0; k < 6; ++k) {
      auto [x, y] = hex_vertex(cx, cy, k);
      if (first || x < min_x) min_x = x;
      if (first || y < min_y) min_y = y;
      if (first || x > max_x) max_x = x;
      if (first || y > max_y) max_y = y;
      first = false;
    }
  }
  double margin = kHexSize * 0.5;
  min_x -= margin;
  min_y -= margin;
  max_x += margin;
  max_y += margin;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fixed2(min_x)
      << " " << fixed2(min_y) << " " << fixed2(max_x - min_x) << " "
      << fixed2(max_y - min_y) << "\">\n";
  out << "  <g fill=\"none\" stroke=\"#444444\" stroke-width=\"1.5\">\n";
  for (const auto& cell : patch.cells) {
    auto [cx, cy] = hex_center(cell.q, cell.r);
    out << "    <polygon points=\"";
    for (int k = 0; k < 6; ++k) {
      auto [x, y] = hex_vertex(cx, cy, k);
      if (k > 0) out << ' ';
      out << fixed2(x) << ',' << fixed2(y);
    }
    out << "\"/>\n";
  }
  out << "  </g>\n";

  out << "  <g font-family=\"sans-serif\" font-size=\"15\" text-anchor=\"middle\" "
         "fill=\"#111111\">\n";
  for (const auto& cell : patch.cells) {
    auto [cx, cy] = hex_center(cell.q, cell.r);
    out << "    <text x=\"" << fixed2(cx) << "\" y=\"" << fixed2(cy + 5.0)
        << "\">" << escape_xml(cell.label) << "</text>\n";
  }
  out << "  </g>\n";

  // Shared corner and border decorations coincide between neighboring
  // cells, so each is drawn once, keyed by its rounded position. A label
  // clash at one position means the patch is inconsistent.
  std::map<std::pair<long, long>, std::string> decorations;
  auto add_decoration = [&decorations](double x, double y, const std::string& label) {
    if (label.empty()) return;
    std::pair<long, long> key = {std::lround(x * 100), std::lround(y * 100)};
    auto [it, inserted] = decorations.emplace(key, label);
    if (!inserted && it->second != label) {
      fail("tiling mismatch: " + it->second + " and " + label +
           " at one position");
    }
  };
  for (const auto& cell : patch.cells) {
    auto [cx, cy] = hex_center(cell.q, cell.r);
    for (int k = 0; k < 6; ++k) {
      auto [x, y] = hex_vertex(cx, cy, k);
      add_decoration(x, y, cell.corners[k]);
      auto [x2, y2] = hex_vertex(cx, cy, (k + 1) % 6);
      add_decoration((x + x2) / 2.0, (y + y2) / 2.0, cell.borders[k]);
    }
  }
  if (!decorations.empty()) {
    out << "  <g font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
    for (const auto& [key, label] : decorations) {
      double x = key.first / 100.0;
      double y = key.second / 100.0;
      out << "    <circle cx=\"" << fixed2(x) << "\" cy=\"" << fixed2(y)
          << "\" r=\"11\" fill=\"#ffffff\" stroke=\"#888888\" stroke-width=\"0.75\"/>\n";
      out << "    <text x=\"" << fixed2(x) << "\" y=\"" << fixed2(y + 3.5)
          << "\" fill=\"#333333\">" << escape_xml(label) << "</text>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot open " + path + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) fail("write to " + path + " failed");
}

}  // namespace tonnetz
