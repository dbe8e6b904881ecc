#include "actmed/harness.hpp"

#include <arpa/inet.h>
#include <fcntl.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <fstream>
#include <sstream>

#include "actmed/errors.hpp"
#include "actmed/realize.hpp"

namespace actmed::med {

std::string to_string(ManagerState s) {
    switch (s) {
        case ManagerState::Idle: return "Idle";
        case ManagerState::Splitting: return "Splitting";
        case ManagerState::Translating: return "Translating";
        case ManagerState::RealizingSource: return "RealizingSource";
        case ManagerState::Materializing: return "Materializing";
        case ManagerState::Dispatching: return "Dispatching";
        case ManagerState::RealizingTarget: return "RealizingTarget";
        case ManagerState::Emitting: return "Emitting";
        case ManagerState::Done: return "Done";
        case ManagerState::Error: return "Error";
    }
    return "Unknown";
}

std::string encode_frame(const WireFrame& frame) {
    std::string body = frame.body;
    if (body.empty() || body.back() != '\n') body += '\n';
    return "CONVERT " + frame.message_id + " " + frame.from + " " + frame.to +
           "\n" + body + "\n";
}

WireFrame decode_frame(const std::string& text) {
    size_t nl = text.find('\n');
    if (nl == std::string::npos) throw Error("wire frame: missing header line");
    std::istringstream header(text.substr(0, nl));
    std::string keyword;
    WireFrame frame;
    header >> keyword >> frame.message_id >> frame.from >> frame.to;
    if (keyword != "CONVERT" || frame.message_id.empty() || frame.from.empty() ||
        frame.to.empty())
        throw Error("wire frame: bad header '" + text.substr(0, nl) + "'");
    std::string rest = text.substr(nl + 1);
    size_t blank = rest.find("\n\n");
    frame.body = blank == std::string::npos ? rest : rest.substr(0, blank + 1);
    return frame;
}

void InProcTransport::bind(const std::string& address) { boxes_[address]; }

void InProcTransport::send(const std::string& address, const WireFrame& frame) {
    auto it = boxes_.find(address);
    if (it == boxes_.end()) throw Error("transport: no inbox at " + address);
    it->second.push_back(frame);
}

std::optional<WireFrame> InProcTransport::poll(const std::string& address) {
    auto it = boxes_.find(address);
    if (it == boxes_.end()) throw Error("transport: not bound to " + address);
    if (it->second.empty()) return std::nullopt;
    WireFrame frame = it->second.front();
    it->second.pop_front();
    return frame;
}

namespace {

std::pair<std::string, int> split_address(const std::string& address) {
    size_t colon = address.rfind(':');
    if (colon == std::string::npos)
        throw Error("transport: address '" + address + "' is not host:port");
    std::string host = address.substr(0, colon);
    int port = 0;
    try {
        port = std::stoi(address.substr(colon + 1));
    } catch (const std::exception&) {
        throw Error("transport: bad port in '" + address + "'");
    }
    return {host, port};
}

sockaddr_in make_sockaddr(const std::string& host, int port) {
    sockaddr_in sa{};
    sa.sin_family = AF_INET;
    sa.sin_port = htons(static_cast<uint16_t>(port));
    if (::inet_pton(AF_INET, host.c_str(), &sa.sin_addr) != 1)
        throw Error("transport: bad host '" + host + "'");
    return sa;
}

}  // namespace

TcpTransport::~TcpTransport() {
    for (auto& [address, fd] : listeners_) ::close(fd);
}

void TcpTransport::bind(const std::string& address) {
    auto [host, port] = split_address(address);
    sockaddr_in sa = make_sockaddr(host, port);
    int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0) throw Error("transport: socket failed");
    int yes = 1;
    ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
    if (::bind(fd, reinterpret_cast<sockaddr*>(&sa), sizeof sa) != 0) {
        ::close(fd);
        throw Error("transport: cannot bind " + address);
    }
    if (::listen(fd, 16) != 0) {
        ::close(fd);
        throw Error("transport: cannot listen on " + address);
    }
    ::fcntl(fd, F_SETFL, ::fcntl(fd, F_GETFL, 0) | O_NONBLOCK);
    listeners_[address] = fd;
}

void TcpTransport::send(const std::string& address, const WireFrame& frame) {
    auto [host, port] = split_address(address);
    sockaddr_in sa = make_sockaddr(host, port);
    int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0) throw Error("transport: socket failed");
    if (::connect(fd, reinterpret_cast<sockaddr*>(&sa), sizeof sa) != 0) {
        ::close(fd);
        throw Error("transport: cannot reach " + address);
    }
    std::string data = encode_frame(frame);
    size_t sent = 0;
    while (sent < data.size()) {
        ssize_t n = ::write(fd, data.data() + sent, data.size() - sent);
        if (n <= 0) {
            ::close(fd);
            throw Error("transport: short write to " + address);
        }
        sent += static_cast<size_t>(n);
    }
    ::close(fd);
}

std::optional<WireFrame> TcpTransport::poll(const std::string& address) {
    auto it = listeners_.find(address);
    if (it == listeners_.end()) throw Error("transport: not bound to " + address);
    int conn = ::accept(it->second, nullptr, nullptr);
    if (conn < 0) return std::nullopt;
    std::string data;
    char buf[4096];
    ssize_t n;
    while ((n = ::read(conn, buf, sizeof buf)) > 0) data.append(buf, static_cast<size_t>(n));
    ::close(conn);
    return decode_frame(data);
}

void Directory::on_join(std::function<void(const DirectoryEntry&)> observer) {
    observers_.push_back(std::move(observer));
}

void Directory::register_manager(const std::string& system, const std::string& address) {
    DirectoryEntry entry{system, address};
    entries_.push_back(entry);
    for (auto& observer : observers_) observer(entry);
}

std::optional<std::string> Directory::lookup(const std::string& system) const {
    for (const auto& e : entries_)
        if (e.system == system) return e.address;
    return std::nullopt;
}

std::vector<DirectoryEntry> Directory::entries() const { return entries_; }

Manager::Manager(const SystemRegistry& reg, const SystemEntry& sys, Transport& transport,
                 Directory& directory, std::function<void(const std::string&)> log)
    : reg_(reg), sys_(sys), transport_(transport), directory_(directory),
      log_(std::move(log)) {}

void Manager::set_state(ManagerState s) { state_ = s; }

void Manager::log(const std::string& line) const {
    if (log_) log_("[" + sys_.id + "] " + line);
}

bool Manager::submit(const msg::RawMessage& raw) {
    try {
        set_state(ManagerState::Splitting);
        msg::StructuredMessage parsed = msg::parse(raw);
        if (!parsed.envelope.message_id) parsed.envelope.message_id = "Message01";
        const std::string id = *parsed.envelope.message_id;
        log("Splitting: " + id + " from agent " + parsed.envelope.sender + " (" +
            parsed.envelope.performative + " -> " + parsed.envelope.receiver + ")");

        set_state(ManagerState::Translating);
        ABox m = msg::to_abox(parsed, sys_.profile);
        log("Translating: " + std::to_string(m.size()) + " assertions");

        set_state(ManagerState::RealizingSource);
        ABox derived = onto::realize(sys_.ontology, m);
        ABox m_sat = m;
        m_sat.merge(derived);
        log("RealizingSource: " + std::to_string(derived.size()) + " derived");

        set_state(ManagerState::Materializing);
        std::string body = dump_assertion_block(m_sat, id);
        log("Materializing: " + std::to_string(m_sat.size()) + " assertions on wire");

        set_state(ManagerState::Dispatching);
        auto host = reg_.system_of_agent(parsed.envelope.receiver);
        if (!host)
            throw Error("no registered system hosts agent " + parsed.envelope.receiver);
        auto address = directory_.lookup(*host);
        if (!address) throw Error("no directory entry for system " + *host);
        if (reg_.check_before_dispatch() && *host != sys_.id) {
            CheckOutcome checked = convert_and_check(reg_, raw, sys_.id, *host, {});
            if (!checked.report.satisfactory) {
                log("withheld " + id + ": conversion to " + *host + " not satisfactory");
                set_state(ManagerState::Done);
                return false;
            }
        }
        transport_.send(*address, WireFrame{id, sys_.id, *host, body});
        log("Dispatching: " + id + " -> " + *host + " at " + *address);
        set_state(ManagerState::Done);
        log("Done");
        return true;
    } catch (const std::exception& e) {
        log("Error(" + to_string(state_) + "): " + e.what());
        set_state(ManagerState::Error);
        return false;
    }
}

void Manager::deliver(const WireFrame& frame) {
    try {
        set_state(ManagerState::RealizingTarget);
        AssertionBlockDoc doc = parse_assertion_block(frame.body);
        ABox m_sat = doc.abox;
        ABox derived = onto::realize(sys_.ontology, m_sat);
        m_sat.merge(derived);
        log("RealizingTarget: " + std::to_string(derived.size()) + " derived");

        set_state(ManagerState::Emitting);
        msg::StructuredMessage out = msg::from_abox(m_sat, sys_.profile, &sys_.ontology);
        msg::RawMessage wire = msg::serialize(out, sys_.syntax);
        log("Emitting: " + msg::to_string(sys_.syntax) + " message " + frame.message_id);
        log("deliver to " + out.envelope.receiver + ":");
        std::istringstream lines(wire.text);
        std::string line;
        while (std::getline(lines, line)) log("  | " + line);

        set_state(ManagerState::Done);
        log("Done");
    } catch (const std::exception& e) {
        log("Error(" + to_string(state_) + "): " + e.what());
        set_state(ManagerState::Error);
    }
}

void Manager::peer_joined(const DirectoryEntry& entry) {
    if (entry.system == sys_.id) return;
    log("directory: system " + entry.system + " joined at " + entry.address);
}

int run_harness(const std::filesystem::path& config,
                const std::filesystem::path& scenario, std::ostream& transcript) {
    auto log = [&transcript](const std::string& line) { transcript << line << "\n"; };

    SystemRegistry reg;
    try {
        reg = SystemRegistry::load(config);
    } catch (const std::exception& e) {
        log(std::string("[harness] config error: ") + e.what());
        return 1;
    }

    std::unique_ptr<Transport> transport;
    if (reg.transport() == "tcp")
        transport = std::make_unique<TcpTransport>();
    else
        transport = std::make_unique<InProcTransport>();

    Directory directory;
    std::vector<std::unique_ptr<Manager>> managers;
    std::map<std::string, Manager*> by_system;
    int errors = 0;
    for (const auto& id : reg.system_ids()) {
        const SystemEntry& entry = reg.system(id);
        try {
            transport->bind(entry.address);
        } catch (const std::exception& e) {
            log(std::string("[harness] ") + e.what());
            return 1;
        }
        auto manager =
            std::make_unique<Manager>(reg, entry, *transport, directory, log);
        directory.on_join(
            [m = manager.get()](const DirectoryEntry& e) { m->peer_joined(e); });
        log("[harness] manager " + id + " at " + entry.address);
        directory.register_manager(id, entry.address);
        by_system[id] = manager.get();
        managers.push_back(std::move(manager));
    }

    auto drain = [&] {
        bool moved = true;
        while (moved) {
            moved = false;
            for (auto& manager : managers) {
                while (auto frame = transport->poll(manager->address())) {
                    manager->deliver(*frame);
                    if (manager->state() == ManagerState::Error) ++errors;
                    moved = true;
                }
            }
        }
    };

    std::ifstream in(scenario);
    if (!in) {
        log("[harness] cannot open scenario " + scenario.string());
        return 1;
    }
    std::filesystem::path base =
        scenario.has_parent_path() ? scenario.parent_path() : std::filesystem::path(".");
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream tokens(line);
        std::string op;
        tokens >> op;
        if (op.empty() || op[0] == '#') continue;
        if (op != "inject") {
            log("[harness] scenario error: unknown op '" + op + "'");
            ++errors;
            continue;
        }
        std::string system, file;
        tokens >> system >> file;
        auto it = by_system.find(system);
        if (system.empty() || file.empty() || it == by_system.end()) {
            log("[harness] scenario error: bad inject line '" + line + "'");
            ++errors;
            continue;
        }
        std::filesystem::path path(file);
        if (!path.is_absolute()) path = base / path;
        std::ifstream msg_in(path);
        if (!msg_in) {
            log("[harness] scenario error: cannot open " + path.string());
            ++errors;
            continue;
        }
        std::ostringstream text;
        text << msg_in.rdbuf();
        log("[harness] inject " + system + " " + path.filename().string());
        it->second->submit(msg::RawMessage{reg.system(system).syntax, text.str()});
        if (it->second->state() == ManagerState::Error) ++errors;
        drain();
    }
    log("[harness] done");
    return errors == 0 ? 0 : 1;
}

}  // namespace actmed::med
