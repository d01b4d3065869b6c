//! Plain HTTP GET server for the puzzle board: `/puzzle.json` is the
//! exported document, every other path is looked up in the UI directory.

use std::net::SocketAddr;
use std::path::{Component, Path, PathBuf};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::thread::JoinHandle;

use tiny_http::{Header, Method, Request, Response, Server};

use crate::error::{CliError, CliResult};

pub const DOCUMENT_PATH: &str = "/puzzle.json";
const WORKERS: usize = 4;

pub struct ServeConfig {
    pub host: String,
    /// 0 picks a free port.
    pub port: u16,
    pub dir: Option<PathBuf>,
    /// Canonical JSON of the document.
    pub document: String,
}

/// A running server. Dropping the handle does not stop it; call
/// [`ServeHandle::shutdown`].
pub struct ServeHandle {
    server: Arc<Server>,
    stopping: Arc<AtomicBool>,
    workers: Vec<JoinHandle<()>>,
    addr: SocketAddr,
}

impl ServeHandle {
    pub fn addr(&self) -> SocketAddr {
        self.addr
    }

    /// Blocks until the workers exit, which they only do after shutdown.
    pub fn join(self) {
        for w in self.workers {
            let _ = w.join();
        }
    }

    pub fn shutdown(self) {
        self.stopping.store(true, Ordering::SeqCst);
        for _ in 0..self.workers.len() {
            self.server.unblock();
        }
        self.join();
    }
}

fn content_type(path: &Path) -> &'static str {
    match path.extension().and_then(|e| e.to_str()) {
        Some("html") => "text/html; charset=utf-8",
        Some("js" | "mjs") => "text/javascript; charset=utf-8",
        Some("css") => "text/css; charset=utf-8",
        Some("json") => "application/json",
        Some("svg") => "image/svg+xml",
        Some("png") => "image/png",
        Some("ico") => "image/x-icon",
        Some("txt") => "text/plain; charset=utf-8",
        _ => "application/octet-stream",
    }
}

fn header(value: &str) -> Header {
    Header::from_bytes("Content-Type", value).expect("static header is valid")
}

/// Maps a request path onto a file under `root`, refusing anything that
/// could climb out of it.
pub fn resolve(root: &Path, url: &str) -> Option<PathBuf> {
    let path = url.split(['?', '#']).next().unwrap_or("");
    let rel = path.trim_start_matches('/');
    if rel.split('/').any(|seg| seg == "..") || rel.contains('\\') {
        return None;
    }
    let rel = if rel.is_empty() || rel.ends_with('/') {
        format!("{rel}index.html")
    } else {
        rel.to_string()
    };
    let rel = Path::new(&rel);
    if !rel.components().all(|c| matches!(c, Component::Normal(_))) {
        return None;
    }
    Some(root.join(rel))
}

fn respond(request: Request, dir: Option<&Path>, document: &str) {
    let not_found = || Response::from_string("not found\n").with_status_code(404);
    let result = if !matches!(request.method(), Method::Get | Method::Head) {
        request.respond(Response::from_string("method not allowed\n").with_status_code(405))
    } else if request.url().split('?').next() == Some(DOCUMENT_PATH) {
        let body = Response::from_string(document).with_header(header("application/json"));
        request.respond(body)
    } else {
        match dir.and_then(|d| resolve(d, request.url())) {
            Some(path) if path.is_file() => match std::fs::read(&path) {
                Ok(bytes) => request
                    .respond(Response::from_data(bytes).with_header(header(content_type(&path)))),
                Err(_) => request.respond(not_found()),
            },
            _ => request.respond(not_found()),
        }
    };
    // The client may have hung up; nothing to do about it.
    let _ = result;
}

pub fn start(config: ServeConfig) -> CliResult<ServeHandle> {
    if let Some(dir) = &config.dir {
        if !dir.is_dir() {
            return Err(CliError::usage(format!(
                "{} is not a directory",
                dir.display()
            )));
        }
    }
    let server = Server::http((config.host.as_str(), config.port)).map_err(|e| {
        CliError::Server(format!("cannot bind {}:{}: {e}", config.host, config.port))
    })?;
    let addr = server
        .server_addr()
        .to_ip()
        .ok_or_else(|| CliError::Server("not listening on an IP socket".into()))?;
    let server = Arc::new(server);
    let dir: Option<Arc<Path>> = config.dir.map(Arc::from);
    let document: Arc<str> = Arc::from(config.document);
    let stopping = Arc::new(AtomicBool::new(false));
    let workers = (0..WORKERS)
        .map(|_| {
            let server = Arc::clone(&server);
            let dir = dir.clone();
            let document = Arc::clone(&document);
            let stopping = Arc::clone(&stopping);
            std::thread::spawn(move || loop {
                match server.recv() {
                    Ok(request) => respond(request, dir.as_deref(), &document),
                    // accept errors are transient; unblocking after shutdown is not
                    Err(_) if stopping.load(Ordering::SeqCst) => break,
                    Err(_) => {}
                }
            })
        })
        .collect();
    Ok(ServeHandle {
        server,
        stopping,
        workers,
        addr,
    })
}
