#include "tagsim/ingest.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

#include "tagsim/errors.hpp"
#include "tagsim/io_util.hpp"
#include "tagsim/textnorm.hpp"

namespace tagsim {

using nlohmann::json;

namespace {

int clamp_count(long long c) {
  return static_cast<int>(std::clamp<long long>(c, 0, 100));
}

std::string get_string(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return "";
  if (!it->is_string()) throw DataError(std::string("field '") + key + "' is not a string");
  return it->get<std::string>();
}

RawSongDoc doc_from_json(const json& j) {
  if (!j.is_object()) throw DataError("line is not a JSON object");
  RawSongDoc doc;
  doc.name = get_string(j, "name");
  doc.album_mbid = get_string(j, "album_mbid");
  doc.artist_name = get_string(j, "artist_name");
  doc.mbid = get_string(j, "mbid");
  doc.album_title = get_string(j, "album_title");
  doc.artist_mbid = get_string(j, "artist_mbid");
  if (doc.mbid.empty()) throw DataError("missing mbid");
  auto tags = j.find("tags");
  if (tags != j.end() && !tags->is_null()) {
    if (!tags->is_array()) throw DataError("field 'tags' is not an array");
    for (const auto& t : *tags) {
      if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_number()) {
        throw DataError("tag entry is not [name, count]");
      }
      doc.tags.push_back({t[0].get<std::string>(), clamp_count(t[1].get<long long>())});
    }
  }
  return doc;
}

}  // namespace

SongDocsResult parse_song_docs(std::istream& in) {
  SongDocsResult result;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      json j = json::parse(line);
      result.docs.push_back(doc_from_json(j));
    } catch (const std::exception& e) {
      ++result.issues.skipped;
      result.issues.note("songs line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return result;
}

RecordsResult build_song_records(const std::vector<RawSongDoc>& docs) {
  RecordsResult result;
  std::unordered_set<std::string> seen_songs;
  for (const auto& doc : docs) {
    if (!seen_songs.insert(doc.mbid).second) continue;  // first occurrence wins
    SongRecord rec;
    rec.song_id = result.song_ids.assign(doc.mbid);
    rec.artist_id = result.artist_ids.assign(doc.artist_mbid);
    rec.album_id = result.album_ids.assign(doc.album_mbid);
    rec.name_norm = normalize_text(doc.name);
    rec.artist_norm = normalize_text(doc.artist_name);
    rec.album_norm = normalize_text(doc.album_title);
    std::map<std::string, int> merged;  // tag_norm -> max count
    for (const auto& tag : doc.tags) {
      if (tag.count <= 0) continue;
      std::string norm = normalize_text(tag.name);
      if (norm.empty()) continue;
      auto [it, inserted] = merged.emplace(norm, tag.count);
      if (!inserted) it->second = std::max(it->second, tag.count);
    }
    rec.tags.reserve(merged.size());
    for (auto& [norm, count] : merged) rec.tags.push_back({norm, count});
    result.records.push_back(std::move(rec));
  }
  return result;
}

HistoriesResult parse_histories(std::istream& in, const IdAssigner& songs) {
  HistoriesResult result;
  std::string line;
  if (!std::getline(in, line) || split(line, ',').size() != 2 ||
      split(line, ',')[0] != "user_id" || split(line, ',')[1] != "song_mbid") {
    throw DataError("histories.csv must start with header 'user_id,song_mbid'");
  }
  std::map<long long, std::vector<int>> by_user;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = split(line, ',');
    if (fields.size() != 2) {
      ++result.issues.skipped;
      result.issues.note("histories line " + std::to_string(lineno) + ": expected 2 fields");
      continue;
    }
    long long user;
    try {
      user = parse_int(fields[0]);
    } catch (const DataError&) {
      ++result.issues.skipped;
      result.issues.note("histories line " + std::to_string(lineno) + ": bad user id");
      continue;
    }
    auto song = songs.lookup(std::string(fields[1]));
    if (!song) {
      ++result.issues.dropped;
      continue;
    }
    by_user[user].push_back(*song);
  }
  result.histories.reserve(by_user.size());
  for (auto& [user, ids] : by_user) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    result.histories.push_back({user, std::move(ids)});
  }
  return result;
}

void write_song_records(std::ostream& out, const std::vector<SongRecord>& records) {
  for (const auto& rec : records) {
    json tags = json::array();
    for (const auto& tag : rec.tags) tags.push_back({tag.tag_norm, tag.count});
    json j{{"song_id", rec.song_id},     {"artist_id", rec.artist_id},
           {"album_id", rec.album_id},   {"name", rec.name_norm},
           {"artist", rec.artist_norm},  {"album", rec.album_norm},
           {"tags", std::move(tags)}};
    out << j.dump() << '\n';
  }
}

std::vector<SongRecord> read_song_records(std::istream& in) {
  std::vector<SongRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      json j = json::parse(line);
      SongRecord rec;
      rec.song_id = j.at("song_id").get<int>();
      rec.artist_id = j.at("artist_id").get<int>();
      rec.album_id = j.at("album_id").get<int>();
      rec.name_norm = j.at("name").get<std::string>();
      rec.artist_norm = j.at("artist").get<std::string>();
      rec.album_norm = j.at("album").get<std::string>();
      for (const auto& t : j.at("tags")) {
        rec.tags.push_back({t.at(0).get<std::string>(), t.at(1).get<int>()});
      }
      records.push_back(std::move(rec));
    } catch (const std::exception& e) {
      throw DataError("records line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return records;
}

void write_idmap_tsv(std::ostream& out, const IdAssigner& ids) {
  const auto& keys = ids.keys();
  for (std::size_t i = 0; i < keys.size(); ++i) {
    out << keys[i] << '\t' << i << '\n';
  }
}

IdAssigner read_idmap_tsv(std::istream& in) {
  IdAssigner ids;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = split(line, '\t');
    if (fields.size() != 2) throw DataError("idmap line " + std::to_string(lineno) + ": expected 2 fields");
    int id = ids.assign(std::string(fields[0]));
    if (id != parse_int(fields[1])) {
      throw DataError("idmap line " + std::to_string(lineno) + ": ids out of order");
    }
  }
  return ids;
}

}  // namespace tagsim
