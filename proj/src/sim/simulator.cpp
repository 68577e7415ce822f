#include "icn/sim/simulator.hpp"
#include "icn/fw/ndn-strategy.hpp"
#include "icn/fw/sifah-strategy.hpp"
#include "icn/sim/apps.hpp"

#include <map>
#include <queue>
#include <random>
#include <variant>

namespace icn::sim {

namespace {

using fw::StrategyActions;

enum class EventKind {
  MessageArrival,
  PitExpiry,
  LinkFailure,
  ConsumerTick,
  ConsumerRetx,
  ConsumerTimeout,
};

struct Event
{
  SimTime time;
  std::uint64_t seq;
  EventKind kind;
  std::size_t node = 0;
  FaceId face{0};
  std::size_t link = 0;
  std::optional<Message> message = std::nullopt;
  std::optional<Name> name = std::nullopt;
  std::uint64_t emission = 0;
};

struct EventOrder
{
  bool
  operator()(const Event& a, const Event& b) const
  {
    return std::tie(a.time, a.seq) > std::tie(b.time, b.seq);
  }
};

struct Face
{
  std::size_t neighbor;
  std::size_t link;
};

struct LinkState
{
  LinkSpec spec;
  std::size_t a;
  std::size_t b;
  FaceId faceAtA;
  FaceId faceAtB;
  bool isFailed = false;
};

struct Node
{
  std::string name;
  NodeRole role;
  /// index = FaceId value; entry 0 unused (application face)
  std::vector<Face> faces;
  std::map<std::size_t, FaceId> faceTo;
  std::variant<std::monostate, fw::ndn::RouterState, fw::sifah::RouterState> router;
  std::optional<ConsumerApp> app;
  const ProducerSpec* producer = nullptr;
  std::mt19937_64 rng;
};

class Engine
{
public:
  explicit
  Engine(const RunConfig& config);

  TraceLog
  run();

private:
  void
  schedule(Event event);

  void
  dispatch(const Event& event);

  void
  onArrival(const Event& event);

  void
  onLinkFailure(std::size_t linkIndex, SimTime now);

  void
  deliverToRouter(std::size_t node, FaceId face, const Message& message, SimTime now);

  void
  apply(std::size_t node, const StrategyActions& actions, SimTime now);

  void
  send(std::size_t node, FaceId face, const Message& message, SimTime now);

  void
  deliverToApp(std::size_t node, const Message& message, SimTime now);

  void
  handleAppOutput(std::size_t node, ConsumerOutput out, SimTime now);

  std::string
  peerName(std::size_t node, FaceId face) const;

  void
  log(SimTime time, std::size_t node, std::string kind, const Name& name, std::string detail)
  {
    m_trace.add(TraceRecord{time, m_nodes[node].name, std::move(kind), name.toUri(), std::move(detail)});
  }

private:
  const RunConfig& m_config;
  std::vector<Node> m_nodes;
  std::vector<LinkState> m_links;
  std::priority_queue<Event, std::vector<Event>, EventOrder> m_queue;
  std::uint64_t m_seq = 0;
  TraceLog m_trace;
};

Engine::Engine(const RunConfig& config)
  : m_config(config)
{
  validate(config);

  std::map<std::string, std::size_t> index;
  for (const auto& spec : config.nodes) {
    Node node;
    node.name = spec.name;
    node.role = spec.role;
    node.faces.resize(1);
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(m_nodes.size())};
    node.rng.seed(seq);
    index[spec.name] = m_nodes.size();
    m_nodes.push_back(std::move(node));
  }

  for (const auto& spec : config.links) {
    LinkState link{spec, index.at(spec.a), index.at(spec.b), FaceId{0}, FaceId{0}};
    auto attach = [&] (std::size_t at, std::size_t other) {
      Node& n = m_nodes[at];
      FaceId face{static_cast<std::uint32_t>(n.faces.size())};
      n.faces.push_back(Face{other, m_links.size()});
      n.faceTo[other] = face;
      return face;
    };
    link.faceAtA = attach(link.a, link.b);
    link.faceAtB = attach(link.b, link.a);
    m_links.push_back(std::move(link));
  }

  for (auto& node : m_nodes) {
    if (node.role == NodeRole::Producer)
      continue;
    if (config.strategy == StrategyKind::Sifah) {
      fw::sifah::RouterState state;
      state.cs = ContentStore(config.csCapacity);
      state.options.mil = config.mil;
      state.options.verification = config.verification;
      node.router = std::move(state);
    }
    else {
      fw::ndn::RouterState state;
      state.cs = ContentStore(config.csCapacity);
      state.options.mil = config.mil;
      state.options.nacksEnabled = config.strategy == StrategyKind::Ndn;
      state.options.retxInterval = config.retxInterval;
      node.router = std::move(state);
    }
  }

  for (const auto& row : resolveFib(config)) {
    Node& node = m_nodes[index.at(row.node)];
    FibNextHop nh{node.faceTo.at(index.at(row.neighbor)), row.hopCount, row.rank};
    std::visit([&] (auto& state) {
      if constexpr (!std::is_same_v<std::decay_t<decltype(state)>, std::monostate>)
        state.fib.addNextHop(row.prefix, nh);
    }, node.router);
  }

  for (const auto& p : config.producers)
    m_nodes[index.at(p.node)].producer = &p;

  for (std::size_t i = 0; i < config.consumers.size(); ++i) {
    const auto& c = config.consumers[i];
    std::size_t at = index.at(c.node);
    Node& node = m_nodes[at];
    SimTime start = consumerStart(config, i);
    SimTime stop = c.stop.value_or(config.duration);
    node.app.emplace(node.name, c, config.strategy, start, consumerTimeout(config, c), stop, node.rng());
    schedule(Event{start, 0, EventKind::ConsumerTick, at});
  }

  for (const auto& f : config.failures) {
    for (std::size_t l = 0; l < m_links.size(); ++l) {
      const auto& spec = m_links[l].spec;
      if ((spec.a == f.a && spec.b == f.b) || (spec.a == f.b && spec.b == f.a)) {
        Event e{f.at, 0, EventKind::LinkFailure};
        e.link = l;
        schedule(std::move(e));
      }
    }
  }
}

void
Engine::schedule(Event event)
{
  event.seq = m_seq++;
  m_queue.push(std::move(event));
}

TraceLog
Engine::run()
{
  while (!m_queue.empty() && m_queue.top().time <= m_config.duration) {
    Event event = m_queue.top();
    m_queue.pop();
    dispatch(event);
  }
  m_trace.add(TraceRecord{m_config.duration, "-", "end", "-", ""});
  return std::move(m_trace);
}

std::string
Engine::peerName(std::size_t node, FaceId face) const
{
  if (face == APP_FACEID)
    return "app";
  return m_nodes[m_nodes[node].faces.at(face.value).neighbor].name;
}

void
Engine::dispatch(const Event& event)
{
  const SimTime now = event.time;
  Node& node = m_nodes[event.node];

  switch (event.kind) {
    case EventKind::MessageArrival:
      onArrival(event);
      break;

    case EventKind::PitExpiry: {
      StrategyActions actions;
      if (auto* ndn = std::get_if<fw::ndn::RouterState>(&node.router))
        actions = fw::ndn::expirePitEntry(*ndn, *event.name, now);
      else if (auto* sifah = std::get_if<fw::sifah::RouterState>(&node.router))
        actions = fw::sifah::expirePitEntry(*sifah, *event.name, now);
      apply(event.node, actions, now);
      break;
    }

    case EventKind::LinkFailure:
      onLinkFailure(event.link, now);
      break;

    case EventKind::ConsumerTick:
      handleAppOutput(event.node, node.app->onTick(now), now);
      break;

    case EventKind::ConsumerRetx:
      handleAppOutput(event.node, node.app->onRetransmit(*event.name, now), now);
      break;

    case EventKind::ConsumerTimeout:
      handleAppOutput(event.node, node.app->onTimeout(*event.name, event.emission, now), now);
      break;
  }
}

void
Engine::onArrival(const Event& event)
{
  const SimTime now = event.time;
  Node& node = m_nodes[event.node];
  const Message& message = *event.message;
  const std::string peer = peerName(event.node, event.face);

  if (m_links[node.faces[event.face.value].link].isFailed) {
    log(now, event.node, "link-down", nameOf(message), "from=" + peer);
    return;
  }

  m_trace.add(messageRecord(now, node.name, "recv", peer, message));

  if (node.role == NodeRole::Producer) {
    if (const auto* interest = std::get_if<Interest>(&message)) {
      if (auto reply = producerOnInterest(*node.producer, m_config.strategy, *interest))
        send(event.node, event.face, *reply, now);
      else
        log(now, event.node, "drop", interest->name, "reason=not-served");
    }
    else {
      log(now, event.node, "drop", nameOf(message), "reason=no-pit-entry");
    }
    return;
  }

  deliverToRouter(event.node, event.face, message, now);
}

void
Engine::deliverToRouter(std::size_t index, FaceId face, const Message& message, SimTime now)
{
  Node& node = m_nodes[index];
  StrategyActions actions;

  if (auto* ndn = std::get_if<fw::ndn::RouterState>(&node.router)) {
    std::visit([&] (const auto& m) {
      using T = std::decay_t<decltype(m)>;
      if constexpr (std::is_same_v<T, Interest>)
        actions = fw::ndn::processInterest(*ndn, m, face, now);
      else if constexpr (std::is_same_v<T, NdoMessage>)
        actions = fw::ndn::processData(*ndn, m, face, now);
      else
        actions = fw::ndn::processNack(*ndn, m, face, now);
    }, message);
  }
  else if (auto* sifah = std::get_if<fw::sifah::RouterState>(&node.router)) {
    std::visit([&] (const auto& m) {
      using T = std::decay_t<decltype(m)>;
      if constexpr (std::is_same_v<T, Interest>)
        actions = fw::sifah::processInterest(*sifah, m, face, now);
      else if constexpr (std::is_same_v<T, NdoMessage>)
        actions = fw::sifah::processData(*sifah, m, face, now);
      else
        actions = fw::sifah::processNack(*sifah, m, face, now);
    }, message);
  }
  apply(index, actions, now);
}

void
Engine::apply(std::size_t node, const StrategyActions& actions, SimTime now)
{
  auto nonceDetail = [] (const std::optional<Nonce>& nonce) {
    return nonce ? " nonce=" + std::to_string(nonce->value) : std::string();
  };

  for (const auto& action : actions) {
    std::visit([&] (const auto& a) {
      using T = std::decay_t<decltype(a)>;
      if constexpr (std::is_same_v<T, fw::SendAction>) {
        send(node, a.face, a.message, now);
      }
      else if constexpr (std::is_same_v<T, fw::PitCreated>) {
        log(now, node, "pit-create", a.name, "in=" + peerName(node, a.inFace) + nonceDetail(a.nonce));
      }
      else if constexpr (std::is_same_v<T, fw::PitAggregated>) {
        log(now, node, "pit-aggregate", a.name, "from=" + peerName(node, a.inFace) + nonceDetail(a.nonce));
      }
      else if constexpr (std::is_same_v<T, fw::PitOutAdded>) {
        log(now, node, "pit-out", a.name, "to=" + peerName(node, a.face));
      }
      else if constexpr (std::is_same_v<T, fw::PitInRemoved>) {
        log(now, node, "pit-in-remove", a.name, "peer=" + peerName(node, a.face));
      }
      else if constexpr (std::is_same_v<T, fw::PitOutRemoved>) {
        log(now, node, "pit-out-remove", a.name, "peer=" + peerName(node, a.face));
      }
      else if constexpr (std::is_same_v<T, fw::PitDeleted>) {
        log(now, node, "pit-delete", a.name, "reason=" + std::string(fw::toString(a.reason)));
      }
      else if constexpr (std::is_same_v<T, fw::CsHit>) {
        log(now, node, "cs-hit", a.name, "");
      }
      else if constexpr (std::is_same_v<T, fw::CsInserted>) {
        log(now, node, "cs-insert", a.name, "");
      }
      else if constexpr (std::is_same_v<T, fw::ExpiryArmed>) {
        Event e{a.deadline, 0, EventKind::PitExpiry, node};
        e.name = a.name;
        schedule(std::move(e));
      }
      else if constexpr (std::is_same_v<T, fw::Dropped>) {
        log(now, node, "drop", a.name, "reason=" + std::string(fw::toString(a.reason)));
      }
    }, action);
  }
}

void
Engine::send(std::size_t index, FaceId face, const Message& message, SimTime now)
{
  Node& node = m_nodes[index];
  m_trace.add(messageRecord(now, node.name, "send", peerName(index, face), message));

  if (face == APP_FACEID) {
    deliverToApp(index, message, now);
    return;
  }

  const Face& f = node.faces.at(face.value);
  LinkState& link = m_links[f.link];
  const std::string& peer = m_nodes[f.neighbor].name;
  if (link.isFailed) {
    log(now, index, "link-down", nameOf(message), "to=" + peer);
    return;
  }
  if (link.spec.lossRate > 0.0) {
    double draw = static_cast<double>(node.rng() >> 11) * 0x1.0p-53;
    if (draw < link.spec.lossRate) {
      log(now, index, "loss", nameOf(message), "to=" + peer);
      return;
    }
  }

  Event e{now + link.spec.delay, 0, EventKind::MessageArrival, f.neighbor};
  e.face = index == link.a ? link.faceAtB : link.faceAtA;
  e.message = message;
  schedule(std::move(e));
}

void
Engine::deliverToApp(std::size_t index, const Message& message, SimTime now)
{
  Node& node = m_nodes[index];
  if (!node.app) {
    log(now, index, "drop", nameOf(message), "reason=no-app");
    return;
  }
  if (const auto* ndo = std::get_if<NdoMessage>(&message))
    handleAppOutput(index, node.app->onData(*ndo, now), now);
  else if (const auto* nack = std::get_if<Nack>(&message))
    handleAppOutput(index, node.app->onNack(*nack, now), now);
  else
    log(now, index, "drop", nameOf(message), "reason=interest-to-app");
}

void
Engine::handleAppOutput(std::size_t index, ConsumerOutput out, SimTime now)
{
  for (auto& r : out.records)
    m_trace.add(std::move(r));

  for (const auto& t : out.timeouts) {
    Event e{t.at, 0, EventKind::ConsumerTimeout, index};
    e.name = t.name;
    e.emission = t.emission;
    schedule(std::move(e));
  }
  for (const auto& [at, name] : out.retransmits) {
    Event e{at, 0, EventKind::ConsumerRetx, index};
    e.name = name;
    schedule(std::move(e));
  }
  if (out.nextTick)
    schedule(Event{*out.nextTick, 0, EventKind::ConsumerTick, index});

  for (const auto& interest : out.interests) {
    m_trace.add(messageRecord(now, m_nodes[index].name, "recv", "app", interest));
    deliverToRouter(index, APP_FACEID, interest, now);
  }
}

void
Engine::onLinkFailure(std::size_t linkIndex, SimTime now)
{
  LinkState& link = m_links[linkIndex];
  if (link.isFailed)
    return;
  link.isFailed = true;

  for (auto [at, face, other] : {std::tuple{link.a, link.faceAtA, link.b},
                                 std::tuple{link.b, link.faceAtB, link.a}}) {
    Node& node = m_nodes[at];
    m_trace.add(TraceRecord{now, node.name, "link-fail", "-", "peer=" + m_nodes[other].name});
    if (auto* ndn = std::get_if<fw::ndn::RouterState>(&node.router)) {
      ndn->fib.setFaceAvailability(face, false);
    }
    else if (auto* sifah = std::get_if<fw::sifah::RouterState>(&node.router)) {
      sifah->fib.setFaceAvailability(face, false);
      apply(at, fw::sifah::processLinkFailure(*sifah, face, now), now);
    }
  }
}

} // namespace

TraceLog
simulate(const RunConfig& config)
{
  Engine engine(config);
  return engine.run();
}

RunResult
run(const RunConfig& config)
{
  RunResult result;
  result.trace = simulate(config);
  result.metrics = metrics::computeMetrics(result.trace, config);
  return result;
}

} // namespace icn::sim
