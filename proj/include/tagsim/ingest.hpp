#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tagsim/records.hpp"

namespace tagsim {

// Per-file parse diagnostics. Bad lines are skipped, never fatal.
struct ParseIssues {
  std::size_t skipped = 0;         // malformed lines/rows
  std::size_t dropped = 0;         // well-formed rows dropped (e.g. unknown mbid)
  std::vector<std::string> notes;  // first few issues, human readable

  void note(std::string msg) {
    if (notes.size() < 20) notes.push_back(std::move(msg));
  }
};

struct SongDocsResult {
  std::vector<RawSongDoc> docs;
  ParseIssues issues;
};

// JSON-lines song metadata. Absent tags -> empty list; counts clamped to
// [0,100]. Malformed lines are skipped and counted with their line number.
SongDocsResult parse_song_docs(std::istream& in);

struct RecordsResult {
  std::vector<SongRecord> records;
  IdAssigner song_ids;
  IdAssigner artist_ids;
  IdAssigner album_ids;
};

// Normalizes text, assigns sequential ids in three independent namespaces,
// drops zero-count tags and merges duplicate normalized tags by max count.
// Duplicate song mbids keep the first occurrence.
RecordsResult build_song_records(const std::vector<RawSongDoc>& docs);

struct HistoriesResult {
  std::vector<UserHistory> histories;  // sorted by user_id
  ParseIssues issues;
};

// CSV `user_id,song_mbid` with that exact header line. Rows whose mbid is
// not in `songs` are dropped and counted.
HistoriesResult parse_histories(std::istream& in, const IdAssigner& songs);

// SongRecord JSON-lines persistence (round-trip exact).
void write_song_records(std::ostream& out, const std::vector<SongRecord>& records);
std::vector<SongRecord> read_song_records(std::istream& in);

void write_idmap_tsv(std::ostream& out, const IdAssigner& ids);
IdAssigner read_idmap_tsv(std::istream& in);

}  // namespace tagsim
