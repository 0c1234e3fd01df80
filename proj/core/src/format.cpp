#include "pob/format.hpp"

#include <algorithm>
#include <sstream>

#include "pob/errors.hpp"

namespace pob {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char ch : line) {
    if (quoted) {
      if (ch == '"') {
        out.push_back("\"" + cur);
        cur.clear();
        quoted = false;
      } else {
        cur += ch;
      }
      continue;
    }
    if (ch == '"') {
      quoted = true;
      continue;
    }
    if (ch == '#') break;
    if (isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

long long parse_int(const std::string& tok, int line) {
  try {
    size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (...) {
    throw SyntaxError(line, "expected an integer, got '" + tok + "'");
  }
}

Rat parse_rat(const std::string& tok, int line) {
  auto slash = tok.find('/');
  if (slash == std::string::npos) return Rat(parse_int(tok, line));
  return Rat(parse_int(tok.substr(0, slash), line), parse_int(tok.substr(slash + 1), line));
}

struct NameTable {
  std::map<std::string, int> disk;
  std::map<std::string, int> handle;  // q and partial handles, global index
  std::vector<std::string> disk_names, handle_names;
  int q_count = 0;
};

SlotRef parse_slot(const NameTable& names, const std::string& tok, int line) {
  auto dot = tok.find('.');
  if (dot == std::string::npos) throw SyntaxError(line, "bad slot '" + tok + "'");
  std::string owner = tok.substr(0, dot);
  std::string rest = tok.substr(dot + 1);
  if (rest.size() < 2) throw SyntaxError(line, "bad slot '" + tok + "'");
  if (auto it = names.disk.find(owner); it != names.disk.end()) {
    if (rest[0] != 'm') throw SyntaxError(line, "disk slots look like d.m0: '" + tok + "'");
    return SlotRef::disk(it->second, static_cast<int>(parse_int(rest.substr(1), line)));
  }
  if (auto it = names.handle.find(owner); it != names.handle.end()) {
    int side = rest[0] == 'L' ? 0 : rest[0] == 'R' ? 1 : -1;
    if (side < 0 || rest.size() < 3 || rest[1] != 'm')
      throw SyntaxError(line, "handle slots look like h.Lm0: '" + tok + "'");
    return SlotRef::handle_side(it->second, side, static_cast<int>(parse_int(rest.substr(2), line)));
  }
  throw SyntaxError(line, "unknown disk or handle '" + owner + "'");
}

// item naming against the assembled complex: d0.m1, d0.g1, d0.o, q0.Lg0, q0.Lm0
int parse_item(const PartialOpenBook& book, const NameTable& names, const std::string& tok,
               int line) {
  const HandleComplex& hc = book.assembled();
  auto dot = tok.find('.');
  if (dot == std::string::npos) throw SyntaxError(line, "bad boundary point '" + tok + "'");
  std::string owner = tok.substr(0, dot);
  std::string rest = tok.substr(dot + 1);
  try {
    if (auto it = names.disk.find(owner); it != names.disk.end()) {
      if (rest == "o") return hc.disk_circle_item(it->second);
      if (rest[0] == 'm') return hc.disk_mark_item(it->second, static_cast<int>(parse_int(rest.substr(1), line)));
      if (rest[0] == 'g') return hc.disk_gap_item(it->second, static_cast<int>(parse_int(rest.substr(1), line)));
    }
    if (auto it = names.handle.find(owner); it != names.handle.end()) {
      int side = rest[0] == 'L' ? 0 : rest[0] == 'R' ? 1 : -1;
      if (side >= 0 && rest.size() >= 2) {
        if (rest[1] == 'g')
          return hc.side_gap_item(it->second, side, static_cast<int>(parse_int(rest.substr(2), line)));
        if (rest[1] == 'm')
          return hc.side_mark_item(it->second, side, static_cast<int>(parse_int(rest.substr(2), line)));
      }
    }
  } catch (const std::exception&) {
    throw SyntaxError(line, "boundary point out of range: '" + tok + "'");
  }
  throw SyntaxError(line, "bad boundary point '" + tok + "'");
}

int parse_face(const PartialOpenBook& book, const NameTable& names, const std::string& tok,
               int line) {
  if (auto it = names.disk.find(tok); it != names.disk.end())
    return book.assembled().disk_face(it->second);
  if (auto it = names.handle.find(tok); it != names.handle.end())
    return book.assembled().handle_face(it->second);
  throw SyntaxError(line, "unknown face '" + tok + "'");
}

// crossing token !<markref>: the gluing edge at a consumed mark
int parse_crossing(const PartialOpenBook& book, const NameTable& names, const std::string& tok,
                   int line) {
  SlotRef slot = parse_slot(names, tok, line);
  int item;
  try {
    item = book.assembled().slot_item(slot);
  } catch (const std::exception&) {
    throw SyntaxError(line, "unknown mark '" + tok + "'");
  }
  if (book.assembled().surface().is_free(item))
    throw SyntaxError(line, "mark '" + tok + "' is not consumed by any handle");
  return book.assembled().surface().item(item).edge;
}

EdgeWord parse_word_tokens(const PartialOpenBook& book, const NameTable& names,
                           const std::vector<std::string>& toks, int line) {
  const Surface& s = book.assembled().surface();
  // expand the longitudinal sugar: x <handle> <+|->
  std::vector<std::string> expanded;
  for (size_t i = 0; i < toks.size(); ++i) {
    if (toks[i] == "x") {
      if (i + 2 >= toks.size()) throw SyntaxError(line, "x needs a handle and a direction");
      auto it = names.handle.find(toks[i + 1]);
      if (it == names.handle.end()) throw SyntaxError(line, "unknown handle '" + toks[i + 1] + "'");
      int h = it->second;
      const HandleComplex& hc = book.assembled();
      const HandleDecl& hd =
          h < book.q_handle_count() ? book.q_handles()[h] : book.p_handles()[h - book.q_handle_count()];
      std::string ma = hd.a.kind == SlotRef::Kind::Disk
                           ? names.disk_names[hd.a.owner] + ".m" + std::to_string(hd.a.mark)
                           : names.handle_names[hd.a.owner] + (hd.a.side == 0 ? ".Lm" : ".Rm") +
                                 std::to_string(hd.a.mark);
      std::string mb = hd.b.kind == SlotRef::Kind::Disk
                           ? names.disk_names[hd.b.owner] + ".m" + std::to_string(hd.b.mark)
                           : names.handle_names[hd.b.owner] + (hd.b.side == 0 ? ".Lm" : ".Rm") +
                                 std::to_string(hd.b.mark);
      bool forward = toks[i + 2] == "+";
      if (!forward && toks[i + 2] != "-") throw SyntaxError(line, "x direction must be + or -");
      expanded.push_back("!" + (forward ? ma : mb));
      expanded.push_back(names.handle_names[h]);
      expanded.push_back("!" + (forward ? mb : ma));
      (void)hc;
      i += 2;
    } else {
      expanded.push_back(toks[i]);
    }
  }
  if (expanded.empty()) throw SyntaxError(line, "empty word");

  bool is_arc = expanded.front().find(':') != std::string::npos;
  std::vector<int> cross, faces;
  if (is_arc) {
    if (expanded.size() < 3 || expanded.back().find(':') == std::string::npos)
      throw SyntaxError(line, "an arc needs two endpoint tokens");
    auto parse_point = [&](const std::string& tok) {
      auto colon = tok.rfind(':');
      int item = parse_item(book, names, tok.substr(0, colon), line);
      return BPoint{item, parse_rat(tok.substr(colon + 1), line)};
    };
    BPoint start = parse_point(expanded.front());
    BPoint end = parse_point(expanded.back());
    for (size_t i = 1; i + 1 < expanded.size(); ++i) {
      if (expanded[i][0] == '!')
        cross.push_back(parse_crossing(book, names, expanded[i].substr(1), line));
      else
        faces.push_back(parse_face(book, names, expanded[i], line));
    }
    if (faces.size() != cross.size() + 1)
      throw SyntaxError(line, "arc tokens must alternate faces and crossings");
    try {
      return make_arc(s, start, cross, faces, end);
    } catch (const NotIncident& e) {
      throw SyntaxError(line, std::string("bad word: ") + e.what());
    }
  }
  // closed: either a single face (trivial loop) or !c f !c f ...
  if (expanded.size() == 1) {
    try {
      return make_trivial_loop(s, parse_face(book, names, expanded[0], line));
    } catch (const NotIncident& e) {
      throw SyntaxError(line, std::string("bad word: ") + e.what());
    }
  }
  if (expanded.size() % 2 != 0) throw SyntaxError(line, "closed word tokens must pair up");
  for (size_t i = 0; i < expanded.size(); i += 2) {
    if (expanded[i][0] != '!')
      throw SyntaxError(line, "closed words look like !mark face !mark face ...");
    cross.push_back(parse_crossing(book, names, expanded[i].substr(1), line));
    faces.push_back(parse_face(book, names, expanded[i + 1], line));
  }
  try {
    return make_closed(s, cross, faces);
  } catch (const NotIncident& e) {
    throw SyntaxError(line, std::string("bad word: ") + e.what());
  }
}

NameTable table_of(const PartialOpenBook& book) {
  NameTable names;
  for (size_t d = 0; d < book.disks().size(); ++d) {
    names.disk[book.disks()[d].name] = static_cast<int>(d);
    names.disk_names.push_back(book.disks()[d].name);
  }
  int h = 0;
  for (const HandleDecl& hd : book.q_handles()) {
    names.handle[hd.name] = h++;
    names.handle_names.push_back(hd.name);
  }
  for (const HandleDecl& hd : book.p_handles()) {
    names.handle[hd.name] = h++;
    names.handle_names.push_back(hd.name);
  }
  names.q_count = book.q_handle_count();
  return names;
}

std::string slot_str(const NameTable& names, const SlotRef& s) {
  if (s.kind == SlotRef::Kind::Disk)
    return names.disk_names[s.owner] + ".m" + std::to_string(s.mark);
  return names.handle_names[s.owner] + (s.side == 0 ? ".Lm" : ".Rm") + std::to_string(s.mark);
}

}  // namespace

std::string print_word(const PartialOpenBook& book, const EdgeWord& w) {
  NameTable names = table_of(book);
  const HandleComplex& hc = book.assembled();
  const Surface& s = hc.surface();
  auto face_name = [&](int f) {
    int nd = static_cast<int>(book.disks().size());
    return f < nd ? names.disk_names[f] : names.handle_names[f - nd];
  };
  auto item_name = [&](int item) {
    const ItemInfo& inf = hc.info(item);
    switch (inf.role) {
      case ItemInfo::Role::DiskMark:
        return names.disk_names[inf.owner] + ".m" + std::to_string(inf.index);
      case ItemInfo::Role::DiskGap:
        return names.disk_names[inf.owner] + ".g" + std::to_string(inf.index);
      case ItemInfo::Role::DiskCircle:
        return names.disk_names[inf.owner] + ".o";
      case ItemInfo::Role::SideMark:
        return names.handle_names[inf.owner] + (inf.side == 0 ? ".Lm" : ".Rm") +
               std::to_string(inf.index);
      case ItemInfo::Role::SideGap:
        return names.handle_names[inf.owner] + (inf.side == 0 ? ".Lg" : ".Rg") +
               std::to_string(inf.index);
      default:
        throw Error("cannot name a foot cell");
    }
  };
  auto crossing_name = [&](int e) {
    // the consumed mark side of the edge
    for (int item : {s.edge(e).a, s.edge(e).b}) {
      const ItemInfo& inf = hc.info(item);
      if (inf.role == ItemInfo::Role::DiskMark || inf.role == ItemInfo::Role::SideMark)
        return "!" + item_name(item);
    }
    throw Error("edge without a mark side");
  };

  std::ostringstream out;
  if (w.kind == WordKind::Arc) {
    out << item_name(w.start.item) << ":" << w.start.t.str();
    for (int i = 0; i <= w.length(); ++i) {
      out << " " << face_name(w.faces[i]);
      if (i < w.length()) out << " " << crossing_name(w.cross[i]);
    }
    out << " " << item_name(w.end.item) << ":" << w.end.t.str();
  } else if (w.length() == 0) {
    out << face_name(w.faces[0]);
  } else {
    for (int i = 0; i < w.length(); ++i) {
      if (i) out << " ";
      out << crossing_name(w.cross[i]) << " " << face_name(w.faces[i]);
    }
  }
  return out.str();
}

EdgeWord parse_word(const PartialOpenBook& book, const std::string& text) {
  return parse_word_tokens(book, table_of(book), tokenize(text), 0);
}

PobDocument parse_document(const std::string& text, bool strict) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  std::vector<DiskDecl> disks;
  std::vector<HandleDecl> q_handles, p_handles;
  NameTable names;
  enum class Mode { Decls, Word, Images } mode = Mode::Decls;
  bool saw_header = false, saw_monodromy = false;
  std::vector<std::pair<int, std::vector<std::string>>> twist_lines, image_lines;
  std::vector<Expectation> expectations;

  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> t = tokenize(line);
    if (t.empty()) continue;
    const std::string& kw = t[0];
    if (!saw_header) {
      if (kw != "pob" || t.size() != 2 || t[1] != "1")
        throw SyntaxError(lineno, "expected header 'pob 1'");
      saw_header = true;
      continue;
    }
    if (kw == "disk") {
      if (t.size() < 4 || t[2] != "marks") throw SyntaxError(lineno, "disk <name> marks <k> [cw]");
      DiskDecl d;
      d.name = t[1];
      d.marks = static_cast<int>(parse_int(t[3], lineno));
      if (t.size() == 5 && t[4] == "cw") d.orientation = -1;
      else if (t.size() > 4) throw SyntaxError(lineno, "unexpected token after disk declaration");
      if (names.disk.count(d.name)) throw SyntaxError(lineno, "duplicate disk '" + d.name + "'");
      names.disk[d.name] = static_cast<int>(disks.size());
      names.disk_names.push_back(d.name);
      disks.push_back(d);
      continue;
    }
    if (kw == "handle" || kw == "partial") {
      if (!p_handles.empty() && kw == "handle")
        throw SyntaxError(lineno, "base handles must precede partial handles");
      if (t.size() < 4) throw SyntaxError(lineno, kw + " <name> <slotA> <slotB> ...");
      HandleDecl h;
      h.name = t[1];
      h.a = parse_slot(names, t[2], lineno);
      h.b = parse_slot(names, t[3], lineno);
      size_t i = 4;
      while (i < t.size()) {
        if (t[i] == "twisted") {
          h.twisted = true;
          ++i;
        } else if (t[i] == "sides" && i + 2 < t.size() && kw == "handle") {
          h.side_marks_l = static_cast<int>(parse_int(t[i + 1], lineno));
          h.side_marks_r = static_cast<int>(parse_int(t[i + 2], lineno));
          i += 3;
        } else {
          throw SyntaxError(lineno, "unexpected token '" + t[i] + "'");
        }
      }
      if (names.handle.count(h.name) || names.disk.count(h.name))
        throw SyntaxError(lineno, "duplicate name '" + h.name + "'");
      names.handle[h.name] = static_cast<int>(q_handles.size() + p_handles.size());
      names.handle_names.push_back(h.name);
      (kw == "handle" ? q_handles : p_handles).push_back(h);
      continue;
    }
    if (kw == "monodromy") {
      if (saw_monodromy) throw SyntaxError(lineno, "duplicate monodromy section");
      saw_monodromy = true;
      if (t.size() != 2) throw SyntaxError(lineno, "monodromy identity|word|images");
      if (t[1] == "identity") mode = Mode::Decls;
      else if (t[1] == "word") mode = Mode::Word;
      else if (t[1] == "images") mode = Mode::Images;
      else throw SyntaxError(lineno, "monodromy identity|word|images");
      continue;
    }
    if (kw == "twist") {
      if (mode != Mode::Word) throw SyntaxError(lineno, "twist lines need 'monodromy word'");
      if (t.size() < 3 || (t[1] != "right" && t[1] != "left"))
        throw SyntaxError(lineno, "twist right|left <closed word>");
      twist_lines.push_back({lineno, t});
      continue;
    }
    if (kw == "image") {
      if (mode != Mode::Images) throw SyntaxError(lineno, "image lines need 'monodromy images'");
      image_lines.push_back({lineno, t});
      continue;
    }
    if (kw == "expect") {
      if (t.size() < 2) throw SyntaxError(lineno, "expect <key> <values...>");
      Expectation e;
      e.key = t[1];
      size_t i = 2;
      for (; i < t.size(); ++i) {
        if (t[i] == "note") {
          if (i + 1 < t.size() && t[i + 1][0] == '"') e.note = t[i + 1].substr(1);
          else throw SyntaxError(lineno, "note needs a quoted string");
          i += 2;
          break;
        }
        if (t[i] == "yes" || t[i] == "no") {
          e.flag = t[i] == "yes";
          continue;
        }
        e.values.push_back(parse_int(t[i], lineno));
      }
      if (i < t.size()) throw SyntaxError(lineno, "unexpected tokens after note");
      expectations.push_back(std::move(e));
      continue;
    }
    throw SyntaxError(lineno, "unknown directive '" + kw + "'");
  }
  if (!saw_header) throw SyntaxError(1, "expected header 'pob 1'");

  // build the identity book first so word tokens can be resolved
  PartialOpenBook base = PartialOpenBook::make(disks, q_handles, p_handles, {});
  PobDocument doc{std::move(base), std::move(expectations)};
  if (mode == Mode::Word && !twist_lines.empty()) {
    std::vector<TwistStep> word;
    for (auto& [ln, toks] : twist_lines) {
      TwistStep step;
      step.handed = toks[1] == "right" ? Handedness::Right : Handedness::Left;
      std::vector<std::string> rest(toks.begin() + 2, toks.end());
      step.curve = parse_word_tokens(doc.book, names, rest, ln);
      word.push_back(std::move(step));
    }
    doc.book = PartialOpenBook::from_twists(disks, q_handles, p_handles, word);
  } else if (mode == Mode::Images) {
    std::vector<EdgeWord> images;
    for (auto& [ln, toks] : image_lines) {
      std::vector<std::string> rest(toks.begin() + 1, toks.end());
      images.push_back(parse_word_tokens(doc.book, names, rest, ln));
    }
    doc.book = PartialOpenBook::make(disks, q_handles, p_handles, images);
  }
  if (strict) {
    ValidationReport rep = validate(doc.book);
    for (const auto& e : rep.entries)
      if (!e.pass)
        throw ValidationError(e.detail.empty() ? e.condition : e.detail);
  }
  return doc;
}

std::string print_book(const PartialOpenBook& book) {
  NameTable names = table_of(book);
  std::ostringstream out;
  out << "pob 1\n";
  for (const DiskDecl& d : book.disks()) {
    out << "disk " << d.name << " marks " << d.marks;
    if (d.orientation < 0) out << " cw";
    out << "\n";
  }
  auto print_handle = [&](const char* kw, const HandleDecl& h) {
    out << kw << " " << h.name << " " << slot_str(names, h.a) << " " << slot_str(names, h.b);
    if (h.twisted) out << " twisted";
    if (h.side_marks_l || h.side_marks_r)
      out << " sides " << h.side_marks_l << " " << h.side_marks_r;
    out << "\n";
  };
  for (const HandleDecl& h : book.q_handles()) print_handle("handle", h);
  for (const HandleDecl& h : book.p_handles()) print_handle("partial", h);

  if (!book.provenance().empty()) {
    out << "monodromy word\n";
    for (const TwistStep& step : book.provenance())
      out << "  twist " << (step.handed == Handedness::Right ? "right" : "left") << " "
          << print_word(book, step.curve) << "\n";
  } else {
    bool identity = book.images() == book.cocores();
    if (identity) {
      out << "monodromy identity\n";
    } else {
      out << "monodromy images\n";
      for (const EdgeWord& w : book.images())
        out << "  image " << print_word(book, w) << "\n";
    }
  }
  return out.str();
}

std::string print_document(const PobDocument& doc) {
  std::string out = print_book(doc.book);
  for (const Expectation& e : doc.expectations) {
    out += "expect " + e.key;
    if (e.flag) out += *e.flag ? " yes" : " no";
    for (long long v : e.values) out += " " + std::to_string(v);
    if (!e.note.empty()) out += " note \"" + e.note + "\"";
    out += "\n";
  }
  return out;
}

}  // namespace pob
