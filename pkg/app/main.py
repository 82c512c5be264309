"""
symspace - Main FastAPI application
"""
import logging

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from app.config import settings
from app.routers import characters, involutions, multiplicity, orbits, partitions, tableaux, verify

logging.basicConfig(level=settings.log_level)

# Create FastAPI app
app = FastAPI(
    title="symspace",
    description="Exact multiplicities for the symmetric spaces of GL_n(q) and U_n(q^2), with the symmetric-group identities behind them",
    version="1.0.0",
    docs_url="/docs",
    redoc_url="/redoc"
)

# Add CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["*"],
    allow_headers=["*"],
)

# Include routers
app.include_router(partitions.router)
app.include_router(characters.router)
app.include_router(involutions.router)
app.include_router(tableaux.router)
app.include_router(orbits.router)
app.include_router(multiplicity.router)
app.include_router(verify.router)


@app.get("/")
async def root():
    """Root endpoint with service information"""
    return {
        "service": "symspace",
        "version": "1.0.0",
        "schema_version": settings.schema_version,
        "docs": "/docs",
        "features": [
            "Murnaghan-Nakayama characters with a Kostka-number oracle",
            "Involutions in centralizers of permutations, plain and signed",
            "Signed tableaux and their phi / psi involutions",
            "Frobenius orbits on the character group of the multiplicative limit",
            "Multiplicities for symplectic, Levi, extension and orthogonal quotients",
            "Basic-character multiplicities by two independent routes"
        ]
    }


@app.get("/health")
async def health_check():
    """Health check endpoint"""
    return {"status": "healthy", "service": "symspace"}


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host="0.0.0.0", port=8000)
