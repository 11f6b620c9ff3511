#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FastAPI wrapper for the reaction network toolkit
Stateless REST endpoints over the same report builders as the command line
"""

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
import logging
import uvicorn

from config.config import load_all_configs
from routes import Routes

# Load all configurations
config_data = load_all_configs()

# Configure logging
logging.basicConfig(level=getattr(logging, str(config_data['logging']['level']).upper(), logging.INFO))
logger = logging.getLogger(__name__)

app = FastAPI(
    title="Reaction Network Analysis API",
    description="Weak reversibility, endotactic checks, weakly reversible realizations and disguised toric locus",
    version="1.0.0"
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

routes_handler = Routes(config=config_data)
app.include_router(routes_handler.router)


if __name__ == "__main__":
    uvicorn.run(app, host=config_data['api']['host'], port=config_data['api']['port'])
