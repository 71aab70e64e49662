//! HTTP JSON service: in-memory game sessions behind an LRU store.

use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use axum::extract::rejection::JsonRejection;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use graceful_core::{Move, Player};
use lru::LruCache;
use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::family::{FamilyArgs, CATALOG};
use crate::session::{Session, SessionSnapshot};
use crate::{AppError, Engine};

#[derive(Debug, Clone)]
pub struct ServiceConfig {
    pub session_cap: usize,
    pub budget: u64,
    /// Solve the whole game when a session starts.
    pub precompute: bool,
    /// Sessions are loaded from and saved to this file.
    pub snapshot: Option<PathBuf>,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        ServiceConfig {
            session_cap: 1024,
            budget: crate::DEFAULT_BUDGET,
            precompute: false,
            snapshot: None,
        }
    }
}

type Shared = Arc<Mutex<Session>>;

pub struct AppState {
    sessions: Mutex<LruCache<String, Shared>>,
    config: ServiceConfig,
}

impl AppState {
    pub fn new(config: ServiceConfig) -> Arc<AppState> {
        let cap = NonZeroUsize::new(config.session_cap.max(1)).unwrap_or(NonZeroUsize::MIN);
        Arc::new(AppState {
            sessions: Mutex::new(LruCache::new(cap)),
            config,
        })
    }

    fn store(&self) -> std::sync::MutexGuard<'_, LruCache<String, Shared>> {
        self.sessions.lock().unwrap_or_else(|e| e.into_inner())
    }

    fn get(&self, id: &str) -> Result<Shared, AppError> {
        self.store().get(id).cloned().ok_or_else(|| AppError::UnknownSession(id.to_string()))
    }

    fn insert(&self, session: Session) -> Shared {
        let shared = Arc::new(Mutex::new(session));
        let id = lock(&shared).id.clone();
        self.store().put(id, Arc::clone(&shared));
        shared
    }

    pub fn len(&self) -> usize {
        self.store().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every stored session, least recently used first.
    pub fn snapshot(&self) -> Vec<SessionSnapshot> {
        let all: Vec<Shared> = self.store().iter().rev().map(|(_, s)| Arc::clone(s)).collect();
        all.iter().map(|s| lock(s).snapshot()).collect()
    }

    /// Replays saved sessions; returns how many were restored.
    pub fn restore(&self, snaps: &[SessionSnapshot]) -> Result<usize, AppError> {
        for snap in snaps {
            self.insert(Session::restore(snap, self.config.budget)?);
        }
        Ok(snaps.len())
    }
}

fn lock(s: &Shared) -> std::sync::MutexGuard<'_, Session> {
    s.lock().unwrap_or_else(|e| e.into_inner())
}

/// 128 random bits as hex.
fn new_id() -> String {
    format!("{:032x}", rand::thread_rng().gen::<u128>())
}

impl IntoResponse for AppError {
    fn into_response(self) -> Response {
        let status = StatusCode::from_u16(self.status()).unwrap_or(StatusCode::INTERNAL_SERVER_ERROR);
        (status, Json(self.to_json())).into_response()
    }
}

fn body<T>(payload: Result<Json<T>, JsonRejection>) -> Result<T, AppError> {
    payload.map(|Json(t)| t).map_err(|e| AppError::BadInput(e.body_text()))
}

#[derive(Debug, Clone, Deserialize, Serialize)]
pub struct NewGame {
    #[serde(flatten)]
    pub family: FamilyArgs,
    pub first: Player,
    pub human: Player,
    #[serde(default = "default_engine")]
    pub engine: String,
}

fn default_engine() -> String {
    "solver".into()
}

#[derive(Debug, Clone, Deserialize, Serialize)]
pub struct MoveRequest {
    pub vertex: usize,
    pub label: usize,
}

async fn create(State(app): State<Arc<AppState>>, payload: Result<Json<NewGame>, JsonRejection>) -> Result<Response, AppError> {
    let req = body(payload)?;
    let spec = req.family.resolve(None)?;
    let engine: Engine = req.engine.parse()?;
    let session = Session::new(new_id(), spec, req.first, req.human, engine, app.config.budget, app.config.precompute)?;
    let json = session.to_json();
    app.insert(session);
    Ok((StatusCode::CREATED, Json(json)).into_response())
}

async fn show(State(app): State<Arc<AppState>>, Path(id): Path<String>) -> Result<Response, AppError> {
    let s = app.get(&id)?;
    let json = lock(&s).to_json();
    Ok(Json(json).into_response())
}

async fn play(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
    payload: Result<Json<MoveRequest>, JsonRejection>,
) -> Result<Response, AppError> {
    let req = body(payload)?;
    let s = app.get(&id)?;
    let mut session = lock(&s);
    let reply = session.human_move(Move::new(req.vertex, req.label))?;
    let mut json = serde_json::to_value(session.to_json()).map_err(|e| AppError::Internal(e.to_string()))?;
    json["engine_move"] = json!(reply);
    Ok(Json(json).into_response())
}

async fn hint(State(app): State<Arc<AppState>>, Path(id): Path<String>) -> Result<Response, AppError> {
    let s = app.get(&id)?;
    let h = lock(&s).hint()?;
    Ok(Json(h).into_response())
}

async fn legal_moves(State(app): State<Arc<AppState>>, Path(id): Path<String>) -> Result<Response, AppError> {
    let s = app.get(&id)?;
    let moves = lock(&s).state.legal_moves();
    Ok(Json(json!({ "v": 1, "moves": moves })).into_response())
}

async fn remove(State(app): State<Arc<AppState>>, Path(id): Path<String>) -> Result<Response, AppError> {
    app.store().pop(&id).ok_or(AppError::UnknownSession(id))?;
    Ok(StatusCode::NO_CONTENT.into_response())
}

async fn families() -> Response {
    Json(json!({ "v": 1, "families": CATALOG })).into_response()
}

pub fn router(app: Arc<AppState>) -> Router {
    Router::new()
        .route("/games", post(create))
        .route("/games/{id}", get(show).delete(remove))
        .route("/games/{id}/moves", post(play))
        .route("/games/{id}/hint", get(hint))
        .route("/games/{id}/legal-moves", get(legal_moves))
        .route("/families", get(families))
        .with_state(app)
}

/// Serves until Ctrl-C, then writes the snapshot file if one is configured.
pub async fn serve(port: u16, config: ServiceConfig) -> Result<(), AppError> {
    let app = AppState::new(config.clone());
    if let Some(path) = config.snapshot.as_ref().filter(|p| p.exists()) {
        let text = std::fs::read_to_string(path).map_err(|e| AppError::BadInput(e.to_string()))?;
        let snaps: Vec<SessionSnapshot> = serde_json::from_str(&text).map_err(|e| AppError::BadInput(e.to_string()))?;
        app.restore(&snaps)?;
    }
    let listener = tokio::net::TcpListener::bind(("0.0.0.0", port))
        .await
        .map_err(|e| AppError::BadInput(format!("cannot listen on port {port}: {e}")))?;
    eprintln!("listening on {}", listener.local_addr().map_err(|e| AppError::Internal(e.to_string()))?);
    axum::serve(listener, router(Arc::clone(&app)))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
        .map_err(|e| AppError::Internal(e.to_string()))?;
    if let Some(path) = &config.snapshot {
        let text = serde_json::to_string_pretty(&app.snapshot()).map_err(|e| AppError::Internal(e.to_string()))?;
        std::fs::write(path, text).map_err(|e| AppError::Internal(e.to_string()))?;
    }
    Ok(())
}
