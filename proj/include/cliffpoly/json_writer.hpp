// Copyright 2026 The cliffpoly developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace cliffpoly {

/// Doubles printed with 17 significant digits so they round-trip losslessly.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Minimal streaming JSON emitter. Output is deterministic byte-for-byte:
/// fixed key order, no whitespace except newlines between top-level array
/// elements.
class JsonWriter {
  public:
    explicit JsonWriter(std::ostream &out) : out_(out) {}

    JsonWriter &begin_object() {
        separate();
        out_ << '{';
        stack_.push_back(false);
        return *this;
    }
    JsonWriter &end_object() {
        out_ << '}';
        stack_.pop_back();
        return *this;
    }
    JsonWriter &begin_array() {
        separate();
        out_ << '[';
        stack_.push_back(false);
        return *this;
    }
    JsonWriter &end_array() {
        out_ << ']';
        stack_.pop_back();
        return *this;
    }
    JsonWriter &key(std::string_view name) {
        separate();
        write_string(name);
        out_ << ':';
        pending_key_ = true;
        return *this;
    }
    JsonWriter &value(double v) {
        separate();
        out_ << format_double(v);
        return *this;
    }
    JsonWriter &value(int v) {
        separate();
        out_ << v;
        return *this;
    }
    JsonWriter &value(long long v) {
        separate();
        out_ << v;
        return *this;
    }
    JsonWriter &value(bool v) {
        separate();
        out_ << (v ? "true" : "false");
        return *this;
    }
    JsonWriter &value(std::string_view v) {
        separate();
        write_string(v);
        return *this;
    }
    JsonWriter &null() {
        separate();
        out_ << "null";
        return *this;
    }
    /// Newline separator between streamed top-level array elements.
    JsonWriter &newline() {
        out_ << '\n';
        return *this;
    }

  private:
    void separate() {
        if (pending_key_) {
            pending_key_ = false;
            return;
        }
        if (!stack_.empty()) {
            if (stack_.back()) out_ << ',';
            stack_.back() = true;
        }
    }
    void write_string(std::string_view s) {
        out_ << '"';
        for (char c : s) {
            switch (c) {
                case '"': out_ << "\\\""; break;
                case '\\': out_ << "\\\\"; break;
                case '\n': out_ << "\\n"; break;
                case '\t': out_ << "\\t"; break;
                case '\r': out_ << "\\r"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", c);
                        out_ << buf;
                    } else {
                        out_ << c;
                    }
            }
        }
        out_ << '"';
    }

    std::ostream &out_;
    std::vector<bool> stack_;
    bool pending_key_ = false;
};

}  // namespace cliffpoly
