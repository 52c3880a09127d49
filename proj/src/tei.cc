// Copyright 2026 parlapol authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "parlapol/tei.h"

#include <cctype>
#include <map>
#include <unordered_set>

#include "parlapol/error.h"

namespace parlapol {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}

bool is_name_char(char c) {
  return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) ||
         c == '-' || c == '.';
}

// Collapses whitespace runs while tracking byte offsets for mention spans.
class SentenceBuilder {
 public:
  void reset() {
    text_.clear();
    mentions_.clear();
    pending_space_ = false;
    span_start_.reset();
  }

  void add_text(std::string_view chunk) {
    for (char c : chunk) {
      if (is_ws(c)) {
        if (!text_.empty()) pending_space_ = true;
      } else {
        flush_space();
        text_.push_back(c);
      }
    }
  }

  void open_span() {
    flush_space();
    span_start_ = text_.size();
  }

  bool span_open() const { return span_start_.has_value(); }

  // Returns false when the span contained no text.
  bool close_span() {
    const size_t start = *span_start_;
    span_start_.reset();
    if (text_.size() <= start) return false;
    MentionSpan span;
    span.start = start;
    span.end = text_.size();
    span.surface = text_.substr(start, span.end - start);
    mentions_.push_back(std::move(span));
    return true;
  }

  Sentence take() {
    Sentence s;
    s.text = std::move(text_);
    s.mentions = std::move(mentions_);
    reset();
    return s;
  }

 private:
  void flush_space() {
    if (pending_space_) {
      text_.push_back(' ');
      pending_space_ = false;
    }
  }

  std::string text_;
  std::vector<MentionSpan> mentions_;
  bool pending_space_ = false;
  std::optional<size_t> span_start_;
};

class TeiParser {
 public:
  TeiParser(std::string_view xml, const std::vector<MpRecord>& roster,
            const std::string& term_id, std::optional<Date> default_date)
      : xml_(xml), term_id_(term_id), date_(default_date) {
    for (const auto& mp : roster) known_ids_.insert(mp.mp_id);
  }

  TeiParseResult run() {
    skip_prolog();
    if (eof()) err_parse("document has no root element");
    if (peek() != '<') err_parse("text content outside the root element");
    parse_element();
    // Only whitespace, comments and PIs may follow the root.
    while (!eof()) {
      if (is_ws(peek())) {
        get();
      } else if (lookahead("<!--")) {
        skip_comment();
      } else if (lookahead("<?")) {
        skip_pi();
      } else {
        err_parse("content after the root element");
      }
    }
    return std::move(result_);
  }

 private:
  // --- low-level scanning ---------------------------------------------

  bool eof() const { return pos_ >= xml_.size(); }
  char peek() const { return xml_[pos_]; }

  char get() {
    char c = xml_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  bool lookahead(std::string_view s) const {
    return xml_.compare(pos_, s.size(), s) == 0;
  }

  void expect(std::string_view s, const char* what) {
    if (!lookahead(s)) err_parse(std::string("expected ") + what);
    for (size_t i = 0; i < s.size(); ++i) get();
  }

  [[noreturn]] void err_parse(const std::string& msg) const {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_) +
                                       ", column " + std::to_string(col_) +
                                       ": " + msg);
  }

  [[noreturn]] void err_validation(const std::string& msg) const {
    throw Error(ErrorCode::kValidation,
                "line " + std::to_string(line_) + ": " + msg);
  }

  void skip_ws() {
    while (!eof() && is_ws(peek())) get();
  }

  void skip_comment() {
    expect("<!--", "comment");
    while (!lookahead("-->")) {
      if (eof()) err_parse("unterminated comment");
      get();
    }
    expect("-->", "comment end");
  }

  void skip_pi() {
    expect("<?", "processing instruction");
    while (!lookahead("?>")) {
      if (eof()) err_parse("unterminated processing instruction");
      get();
    }
    expect("?>", "processing instruction end");
  }

  void skip_doctype() {
    expect("<!DOCTYPE", "doctype");
    int bracket = 0;
    while (!eof()) {
      char c = get();
      if (c == '[') ++bracket;
      if (c == ']') --bracket;
      if (c == '>' && bracket == 0) return;
    }
    err_parse("unterminated doctype");
  }

  void skip_prolog() {
    // UTF-8 BOM.
    if (lookahead("\xEF\xBB\xBF")) {
      get();
      get();
      get();
    }
    for (;;) {
      skip_ws();
      if (lookahead("<?")) {
        skip_pi();
      } else if (lookahead("<!--")) {
        skip_comment();
      } else if (lookahead("<!DOCTYPE")) {
        skip_doctype();
      } else {
        return;
      }
    }
  }

  std::string parse_name() {
    if (eof() || !is_name_start(peek())) err_parse("expected a name");
    std::string name;
    name.push_back(get());
    while (!eof() && is_name_char(peek())) name.push_back(get());
    return name;
  }

  std::string decode_entity() {
    // positioned on '&'
    get();
    std::string ent;
    while (!eof() && peek() != ';') {
      ent.push_back(get());
      if (ent.size() > 12) err_parse("malformed entity reference");
    }
    if (eof()) err_parse("unterminated entity reference");
    get();  // ';'
    if (ent == "amp") return "&";
    if (ent == "lt") return "<";
    if (ent == "gt") return ">";
    if (ent == "quot") return "\"";
    if (ent == "apos") return "'";
    if (!ent.empty() && ent[0] == '#') {
      long cp = 0;
      try {
        cp = (ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X'))
                 ? std::stol(ent.substr(2), nullptr, 16)
                 : std::stol(ent.substr(1), nullptr, 10);
      } catch (...) {
        err_parse("malformed character reference &" + ent + ";");
      }
      if (cp <= 0 || cp > 0x10FFFF)
        err_parse("character reference out of range");
      std::string out;
      char32_t u = static_cast<char32_t>(cp);
      if (u < 0x80) {
        out.push_back(static_cast<char>(u));
      } else if (u < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (u >> 6)));
        out.push_back(static_cast<char>(0x80 | (u & 0x3F)));
      } else if (u < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (u >> 12)));
        out.push_back(static_cast<char>(0x80 | ((u >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (u & 0x3F)));
      } else {
        out.push_back(static_cast<char>(0xF0 | (u >> 18)));
        out.push_back(static_cast<char>(0x80 | ((u >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((u >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (u & 0x3F)));
      }
      return out;
    }
    err_parse("unknown entity &" + ent + ";");
  }

  std::map<std::string, std::string> parse_attributes(bool& self_closing) {
    std::map<std::string, std::string> attrs;
    for (;;) {
      skip_ws();
      if (eof()) err_parse("unterminated start tag");
      if (peek() == '>') {
        get();
        self_closing = false;
        return attrs;
      }
      if (lookahead("/>")) {
        get();
        get();
        self_closing = true;
        return attrs;
      }
      std::string name = parse_name();
      skip_ws();
      expect("=", "'=' after attribute name");
      skip_ws();
      if (eof() || (peek() != '"' && peek() != '\''))
        err_parse("attribute value must be quoted");
      const char quote = get();
      std::string value;
      for (;;) {
        if (eof()) err_parse("unterminated attribute value");
        if (peek() == quote) {
          get();
          break;
        }
        if (peek() == '<') err_parse("'<' in attribute value");
        if (peek() == '&') {
          value += decode_entity();
        } else {
          value.push_back(get());
        }
      }
      if (!attrs.emplace(std::move(name), std::move(value)).second)
        err_parse("duplicate attribute");
    }
  }

  // --- element handling -------------------------------------------------

  void parse_element() {
    expect("<", "start tag");
    const std::string name = parse_name();
    const size_t tag_line = line_;
    bool self_closing = false;
    auto attrs = parse_attributes(self_closing);

    enum class Kind { kU, kS, kNamePer, kOther } kind = Kind::kOther;
    if (name == "u") {
      if (in_u_) err_validation("nested <u> elements");
      open_speech(attrs, tag_line);
      kind = Kind::kU;
    } else if (name == "s") {
      if (!in_u_) err_validation("<s> element outside <u>");
      if (in_s_) err_validation("nested <s> elements");
      in_s_ = true;
      sentence_.reset();
      kind = Kind::kS;
    } else if (name == "name") {
      auto it = attrs.find("type");
      if (it != attrs.end() && it->second == "PER") {
        if (!in_s_)
          err_validation("<name type=\"PER\"> outside any <s> element");
        if (sentence_.span_open())
          err_validation("nested <name type=\"PER\"> spans");
        sentence_.open_span();
        kind = Kind::kNamePer;
      }
    }

    if (!self_closing) {
      parse_content(name);
    }

    switch (kind) {
      case Kind::kU:
        close_speech();
        break;
      case Kind::kS:
        current_->sentences.push_back(sentence_.take());
        in_s_ = false;
        break;
      case Kind::kNamePer:
        if (!sentence_.close_span())
          result_.warnings.push_back(
              "line " + std::to_string(line_) +
              ": empty PER mention dropped in speech " + current_->speech_id);
        break;
      case Kind::kOther:
        break;
    }
  }

  void parse_content(const std::string& open_name) {
    for (;;) {
      if (eof()) err_parse("unexpected end of file inside <" + open_name + ">");
      const char c = peek();
      if (c == '<') {
        if (lookahead("</")) {
          get();
          get();
          const std::string name = parse_name();
          if (name != open_name)
            err_parse("mismatched end tag </" + name + ">, expected </" +
                      open_name + ">");
          skip_ws();
          expect(">", "'>' of end tag");
          return;
        }
        if (lookahead("<!--")) {
          skip_comment();
        } else if (lookahead("<![CDATA[")) {
          parse_cdata();
        } else if (lookahead("<?")) {
          skip_pi();
        } else {
          parse_element();
        }
      } else if (c == '&') {
        const std::string decoded = decode_entity();
        if (in_s_) sentence_.add_text(decoded);
      } else {
        std::string chunk;
        while (!eof() && peek() != '<' && peek() != '&') chunk.push_back(get());
        if (in_s_) sentence_.add_text(chunk);
      }
    }
  }

  void parse_cdata() {
    expect("<![CDATA[", "CDATA section");
    std::string chunk;
    while (!lookahead("]]>")) {
      if (eof()) err_parse("unterminated CDATA section");
      chunk.push_back(get());
    }
    expect("]]>", "CDATA end");
    if (in_s_) sentence_.add_text(chunk);
  }

  void open_speech(const std::map<std::string, std::string>& attrs,
                   size_t tag_line) {
    Speech sp;
    auto id = attrs.find("xml:id");
    if (id == attrs.end())
      throw Error(ErrorCode::kValidation,
                  "line " + std::to_string(tag_line) +
                      ": <u> element without xml:id");
    sp.speech_id = id->second;
    sp.term_id = term_id_;
    sp.date = date_;
    auto who = attrs.find("who");
    if (who == attrs.end()) {
      result_.warnings.push_back("line " + std::to_string(tag_line) +
                                 ": <u> without who attribute (speech " +
                                 sp.speech_id + ")");
    } else {
      std::string ref = who->second;
      if (!ref.empty() && ref[0] == '#') ref.erase(0, 1);
      if (known_ids_.count(ref)) {
        sp.speaker_mp_id = ref;
      } else {
        result_.warnings.push_back("line " + std::to_string(tag_line) +
                                   ": unknown who reference \"" + who->second +
                                   "\" (speech " + sp.speech_id + ")");
      }
    }
    speech_ = std::move(sp);
    current_ = &*speech_;
    in_u_ = true;
  }

  void close_speech() {
    result_.speeches.push_back(std::move(*speech_));
    speech_.reset();
    current_ = nullptr;
    in_u_ = false;
  }

  std::string_view xml_;
  size_t pos_ = 0;
  size_t line_ = 1;
  size_t col_ = 1;

  std::string term_id_;
  std::optional<Date> date_;
  std::unordered_set<std::string> known_ids_;

  bool in_u_ = false;
  bool in_s_ = false;
  std::optional<Speech> speech_;
  Speech* current_ = nullptr;
  SentenceBuilder sentence_;

  TeiParseResult result_;
};

}  // namespace

TeiParseResult parse_tei_subset(std::string_view xml,
                                const std::vector<MpRecord>& roster,
                                const std::string& term_id,
                                std::optional<Date> default_date) {
  TeiParser parser(xml, roster, term_id, default_date);
  return parser.run();
}

}  // namespace parlapol
