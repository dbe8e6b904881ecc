#pragma once

#include <deque>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "actmed/mediator.hpp"
#include "actmed/registry.hpp"

namespace actmed::med {

enum class ManagerState {
    Idle,
    Splitting,
    Translating,
    RealizingSource,
    Materializing,
    Dispatching,
    RealizingTarget,
    Emitting,
    Done,
    Error,
};

std::string to_string(ManagerState s);

struct WireFrame {
    std::string message_id;
    std::string from;
    std::string to;
    std::string body;  // assertion-block text
};

// `CONVERT <msg-id> <from> <to>` header line, body, blank-line terminator.
std::string encode_frame(const WireFrame& frame);
WireFrame decode_frame(const std::string& text);

// Ordered, reliable, one frame per message. Managers poll their own inbox.
class Transport {
public:
    virtual ~Transport() = default;
    virtual void bind(const std::string& address) = 0;
    virtual void send(const std::string& address, const WireFrame& frame) = 0;
    virtual std::optional<WireFrame> poll(const std::string& address) = 0;
};

class InProcTransport : public Transport {
public:
    void bind(const std::string& address) override;
    void send(const std::string& address, const WireFrame& frame) override;
    std::optional<WireFrame> poll(const std::string& address) override;

private:
    std::map<std::string, std::deque<WireFrame>> boxes_;
};

// Newline-delimited frames over TCP; one connection per frame. Addresses are
// host:port and managers listen while the harness runs.
class TcpTransport : public Transport {
public:
    ~TcpTransport() override;
    void bind(const std::string& address) override;
    void send(const std::string& address, const WireFrame& frame) override;
    std::optional<WireFrame> poll(const std::string& address) override;

private:
    std::map<std::string, int> listeners_;
};

struct DirectoryEntry {
    std::string system;
    std::string address;
};

// The assistant process keeping track of which managers exist; joins are
// announced to everyone already registered.
class Directory {
public:
    void on_join(std::function<void(const DirectoryEntry&)> observer);
    void register_manager(const std::string& system, const std::string& address);
    std::optional<std::string> lookup(const std::string& system) const;
    std::vector<DirectoryEntry> entries() const;

private:
    std::vector<DirectoryEntry> entries_;
    std::vector<std::function<void(const DirectoryEntry&)>> observers_;
};

// One manager per system. submit() runs the source half of the pipeline for
// an agent of its own system and dispatches the wire payload; deliver() runs
// the target half for an inbound frame.
class Manager {
public:
    Manager(const SystemRegistry& reg, const SystemEntry& sys, Transport& transport,
            Directory& directory, std::function<void(const std::string&)> log);

    const std::string& system() const { return sys_.id; }
    const std::string& address() const { return sys_.address; }
    ManagerState state() const { return state_; }

    bool submit(const msg::RawMessage& raw);
    void deliver(const WireFrame& frame);
    void peer_joined(const DirectoryEntry& entry);

private:
    void set_state(ManagerState s);
    void log(const std::string& line) const;

    const SystemRegistry& reg_;
    const SystemEntry& sys_;
    Transport& transport_;
    Directory& directory_;
    std::function<void(const std::string&)> log_;
    ManagerState state_ = ManagerState::Idle;
};

// Loads the registry, spawns managers and the directory, then executes the
// scenario script (`inject <system> <message-file>` lines, paths relative to
// the script). The transcript records every state change and delivery.
// Returns nonzero when any manager ended in an error state.
int run_harness(const std::filesystem::path& config,
                const std::filesystem::path& scenario, std::ostream& transcript);

}  // namespace actmed::med
