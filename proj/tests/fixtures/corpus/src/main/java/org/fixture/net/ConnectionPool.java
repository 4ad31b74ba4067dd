package org.fixture.net;

import java.net.Socket;
import java.net.SocketException;
import java.net.UnknownHostException;
import java.util.concurrent.TimeoutException;

import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

public class ConnectionPool {
    private static final Logger logger = LoggerFactory.getLogger(ConnectionPool.class);

    public Socket acquire(String host, int port) {
        try {
            return open(host, port);
        } catch (SocketException | UnknownHostException e) {
            logger.error("Could not open connection to " + host);
        } catch (TimeoutException e) {
            logger.error("Could not open connection to " + host);
        }
        return null;
    }

    private Socket open(String host, int port) throws SocketException, UnknownHostException, TimeoutException {
        return null;
    }
}
